#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stillife/board.hpp"
#include "stillife/cost.hpp"
#include "stillife/row.hpp"

// Row decomposition of the still-life objective. The board is a sequence of
// row variables r_1..r_n; each link cost below charges the dead cells of one
// row and is infinite when that row cannot sit stably in its context,
// including the "no births in the frame" conditions. Summed over a full
// board the links are finite iff the board is a still life, and the finite
// value is exactly its number of dead cells.

namespace stillife {

// Cost of the first row b with the second row c below it. Charges dead(b);
// infinite if a cell of b is unstable under the frame above, or if b would
// give birth above the board (three consecutive live cells).
Cost first_row_cost(std::uint32_t b, std::uint32_t c, int n);

// Cost of an interior row b between rows a and c. Charges dead(b); infinite
// if a cell of b is unstable, or if the three rows' first (or last) columns
// are all live, which would give birth beside the board.
Cost interior_row_cost(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                       int n);

// Cost of the last row b with row a above it. Mirror of first_row_cost.
Cost last_row_cost(std::uint32_t a, std::uint32_t b, int n);

// Sum of all link costs of a full board: finite iff the board is a still
// life, and then equal to its number of dead cells.
Cost total_cost(const Board& b);

// Link costs evaluable on the first k rows alone, i.e. everything except the
// links that mention row k+1 and beyond: charges rows 1..k-1. Zero for k <= 1.
Cost partial_cost(std::span<const std::uint32_t> rows, int n);

// Row prefix with its cached partial cost (the beam search's node type).
struct PartialSolution {
  std::vector<std::uint32_t> rows;
  Cost cost;  // invariant: cost == partial_cost(rows, n)

  int depth() const { return static_cast<int>(rows.size()); }
};

// The prefix extended by one row, cost updated incrementally with the one
// newly evaluable link.
PartialSolution extended(const PartialSolution& p, std::uint32_t next_row,
                         int n);

}  // namespace stillife
