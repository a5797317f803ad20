#include <stdexcept>

#include "doctest.h"
#include "stillife/board.hpp"
#include "stillife/life.hpp"
#include "stillife/oracle.hpp"
#include "stillife/rng.hpp"
#include "stillife/wcsp.hpp"

using namespace stillife;

namespace {

const char* kBlock = "....\n.##.\n.##.\n....\n";
const char* kBeehive = ".##.\n#..#\n.##.\n....\n";
const char* kBlinker = ".#.\n.#.\n.#.\n";

}  // namespace

TEST_CASE("embed surrounds the board with a dead frame") {
  Board b = Board::parse("##\n##\n");
  Board e = embed(b);
  CHECK(e.size() == 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(!e.cell(0, k));
    CHECK(!e.cell(3, k));
    CHECK(!e.cell(k, 0));
    CHECK(!e.cell(k, 3));
  }
  CHECK(e.cell(1, 1));
  CHECK(e.cell(2, 2));
  CHECK(e.live_cells() == 4);
}

TEST_CASE("neighbor_count on embedded coordinates") {
  Board b = Board::parse("##\n##\n");
  CHECK(neighbor_count(b, 1, 1) == 3);  // corner of the block
  CHECK(neighbor_count(b, 0, 0) == 1);  // frame corner sees one live cell
  CHECK(neighbor_count(b, 0, 1) == 2);
  CHECK(neighbor_count(b, 2, 2) == 3);
  CHECK_THROWS_AS(neighbor_count(b, -1, 0), std::out_of_range);
  CHECK_THROWS_AS(neighbor_count(b, 0, 4), std::out_of_range);
}

TEST_CASE("step runs one generation on the embedded view") {
  Board blinker = Board::parse(kBlinker);
  Board next = step(blinker);
  // Vertical triple becomes horizontal, in embedded coordinates row 2.
  CHECK(next.size() == 5);
  CHECK(next.row(2) == 0b01110u);
  CHECK(next.live_cells() == 3);
  // A second step restores the original embedding.
  Board again(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) again.set_cell(i, j, next.cell(i + 1, j + 1));
  CHECK(step(again) == embed(blinker));
}

TEST_CASE("still-life classification of pocket patterns") {
  CHECK(is_still_life(Board::parse(kBlock)));
  CHECK(is_still_life(Board::parse(kBeehive)));
  CHECK(is_still_life(Board(3)));  // empty board
  CHECK(!is_still_life(Board::parse(kBlinker)));
  // Block pushed into the corner is still stable (frame is dead, not wrap).
  CHECK(is_still_life(Board::parse("##.\n##.\n...\n")));
  // A domino dies.
  CHECK(!is_still_life(Board::parse("...\n##.\n...\n")));
}

TEST_CASE("is_still_life == fixpoint of step == all cells stable") {
  Rng rng(23);
  for (int t = 0; t < 400; ++t) {
    int n = 3 + static_cast<int>(rng.below(8));  // 3..10
    Board b = random_board(n, rng);
    bool fix = step(b) == embed(b);
    bool cells = true;
    for (int i = 0; i < n + 2 && cells; ++i)
      for (int j = 0; j < n + 2; ++j)
        if (!is_cell_stable(b, i, j)) {
          cells = false;
          break;
        }
    CHECK(is_still_life(b) == fix);
    CHECK(is_still_life(b) == cells);
  }
}

TEST_CASE("fitness of reference boards") {
  // Empty 3x3: nine dead cells, no violations.
  CHECK(fitness(Board(3)) == 9);
  CHECK(violation_count(Board(3)) == 0);

  // Single live centre cell of a 3x3: eight dead cells plus one violated
  // cell (a live cell two steps short of viability) weighted by n^2 = 9.
  Board centre(3);
  centre.set_cell(1, 1, true);
  CHECK(violation_count(centre) == 1);
  CHECK(fitness(centre) == 431);

  // Still lifes score exactly their dead-cell count.
  CHECK(fitness(Board::parse(kBlock)) == 12);
  CHECK(fitness(Board::parse(kBeehive)) == 10);
}

TEST_CASE("zero violations exactly on still lifes (exhaustive 3x3)") {
  for (std::uint32_t bits = 0; bits < 512; ++bits) {
    Board b(3);
    for (int i = 0; i < 3; ++i) b.set_row(i, (bits >> (3 * i)) & 7u);
    bool still = is_still_life(b);
    CHECK((violation_count(b) == 0) == still);
    if (still) {
      CHECK(fitness(b) == 9 - b.live_cells());
    } else {
      // Infeasible boards always score worse than any feasible one.
      CHECK(fitness(b) > 9);
      CHECK(violation_degree(b) >= violation_count(b));
    }
  }
}

TEST_CASE("fitness agrees with the link-cost decomposition") {
  Rng rng(29);
  for (int t = 0; t < 400; ++t) {
    int n = 3 + static_cast<int>(rng.below(8));
    Board b = random_board(n, rng);
    Cost c = total_cost(b);
    if (c.is_finite()) {
      CHECK(fitness(b) == c.value());
    } else {
      CHECK(fitness(b) > static_cast<FitnessValue>(n) * n);
    }
  }
}

TEST_CASE("delta_fitness equals the exact fitness difference") {
  Board centre(3);
  centre.set_cell(1, 1, true);
  CHECK(delta_fitness(Board(3), 1, 1) == 422);
  CHECK(delta_fitness(centre, 1, 1) == -422);

  Rng rng(31);
  for (int t = 0; t < 2000; ++t) {
    int n = 3 + static_cast<int>(rng.below(10));  // 3..12
    Board b = random_board(n, rng);
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    Board flipped = b;
    flipped.flip(i, j);
    CHECK(delta_fitness(b, i, j) == fitness(flipped) - fitness(b));
  }
  CHECK_THROWS_AS(delta_fitness(Board(3), 3, 0), std::out_of_range);
  CHECK_THROWS_AS(delta_fitness(Board(3), 0, -1), std::out_of_range);
}
