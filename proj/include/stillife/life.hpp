#pragma once

#include <cstdint>

#include "stillife/board.hpp"

namespace stillife {

// All stability talk is about the embedded view: the n x n board surrounded by
// a frame of permanently dead cells, giving an (n+2) x (n+2) grid. Embedded
// coordinates are 0-based over that grid, so embedded (i, j) = board
// (i-1, j-1) and index 0 / n+1 address the frame.

using FitnessValue = std::int64_t;

// The board placed inside its dead frame, as an (n+2) x (n+2) board.
Board embed(const Board& b);

// Live cells among the (up to 8) neighbors of embedded cell (i, j).
// Cells beyond the frame are dead. Throws for coordinates outside 0..n+1.
int neighbor_count(const Board& b, int i, int j);

// Still-life condition for one embedded cell: a live cell needs 2 or 3 live
// neighbors, a dead cell must not have exactly 3.
bool is_cell_stable(const Board& b, int i, int j);

// One Game of Life generation of the embedded view, returned as an
// (n+2) x (n+2) board (cells beyond the view are dead and stay dead:
// a birth out there would need 3 live frame cells).
Board step(const Board& b);

// A board is a still life iff one generation leaves its embedding unchanged;
// this includes "no births in the frame".
bool is_still_life(const Board& b);

// Penalized objective: number of dead cells plus K times the sum of per-cell
// violation penalties over the whole embedded view, K = n^2. A violated cell
// costs K' + degree with K' = 5n^2, where the degree grades how far the
// neighbor count is from a stable one. Zero penalty iff the board is a still
// life; minimizing fitness over still lifes minimizes dead cells.
FitnessValue fitness(const Board& b);

// fitness(b with cell (i, j) flipped) - fitness(b), in O(1): only the flipped
// cell and its embedded 3x3 window change their penalty terms. Board
// coordinates; throws when (i, j) is outside the board.
FitnessValue delta_fitness(const Board& b, int i, int j);

// Number of embedded cells violating the still-life condition, and the sum of
// their violation degrees (test/diagnostic helpers for the fitness ordering).
int violation_count(const Board& b);
std::int64_t violation_degree(const Board& b);

}  // namespace stillife
