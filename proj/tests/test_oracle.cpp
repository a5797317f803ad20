#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stillife/life.hpp"
#include "stillife/oracle.hpp"
#include "stillife/wcsp.hpp"

using namespace stillife;

TEST_CASE("exhaustive_opt pins the smallest sizes") {
  OracleResult r1 = exhaustive_opt(1);
  CHECK(r1.opt == Cost::finite(1));  // only the empty 1x1 board is stable
  CHECK(r1.enumerated == 2);
  REQUIRE(r1.board.has_value());
  CHECK(r1.board->live_cells() == 0);

  OracleResult r2 = exhaustive_opt(2);
  CHECK(r2.opt == Cost::finite(0));  // the block fills the whole board
  CHECK(r2.enumerated == 16);
  REQUIRE(r2.board.has_value());
  CHECK(r2.board->live_cells() == 4);

  OracleResult r3 = exhaustive_opt(3);
  CHECK(r3.opt == Cost::finite(3));
  CHECK(r3.enumerated == 512);
  REQUIRE(r3.board.has_value());
  CHECK(is_still_life(*r3.board));
  CHECK(total_cost(*r3.board) == r3.opt);

  OracleResult r4 = exhaustive_opt(4);
  CHECK(r4.opt == Cost::finite(8));
  CHECK(r4.enumerated == 65536);
  REQUIRE(r4.board.has_value());
  CHECK(is_still_life(*r4.board));

  CHECK_THROWS_AS(exhaustive_opt(5), std::invalid_argument);
}

TEST_CASE("best completion from the empty prefix equals the global optimum") {
  std::vector<std::uint32_t> empty;
  for (int n = 3; n <= 4; ++n) {
    OracleResult full = exhaustive_best_completion(empty, n);
    CHECK(full.opt == exhaustive_opt(n).opt);
    REQUIRE(full.board.has_value());
    CHECK(total_cost(*full.board) == full.opt);
  }
}

TEST_CASE("best completion respects a given prefix") {
  // Prefix = top half of the 4x4 double block; the best completion can only
  // finish what the prefix allows.
  std::vector<std::uint32_t> prefix = {0b0110u, 0b0110u};
  OracleResult r = exhaustive_best_completion(prefix, 4);
  REQUIRE(r.board.has_value());
  CHECK(r.board->row(0) == 0b0110u);
  CHECK(r.board->row(1) == 0b0110u);
  CHECK(r.opt == total_cost(*r.board));
  CHECK(r.opt.is_finite());
  // A board that keeps the prefix cannot beat it.
  CHECK(r.opt >= Cost::finite(8));

  // A prefix that is already infeasible only extends to infeasible boards.
  std::vector<std::uint32_t> bad = {0b0100u, 0u};
  OracleResult rb = exhaustive_best_completion(bad, 4);
  CHECK(!rb.opt.is_finite());
  CHECK(!rb.board.has_value());
}

TEST_CASE("domain-driven completion and the blowup guards") {
  std::vector<std::uint32_t> empty;
  Domain sym = Domain::symmetric(6);
  OracleResult r = exhaustive_best_completion(empty, 6, &sym);
  REQUIRE(r.board.has_value());
  for (int i = 0; i < 6; ++i)
    CHECK(reflect(r.board->row(i), 6) == r.board->row(i));
  CHECK(r.opt == total_cost(*r.board));

  // Without a domain the search is limited to small boards and short tails.
  CHECK_THROWS_AS(exhaustive_best_completion(empty, 9), std::invalid_argument);
  std::vector<std::uint32_t> two = {0u, 0u};
  CHECK_THROWS_AS(exhaustive_best_completion(two, 8), std::invalid_argument);
  std::vector<std::uint32_t> too_long = {0u, 0u, 0u, 0u};
  CHECK_THROWS_AS(exhaustive_best_completion(too_long, 3),
                  std::invalid_argument);
  Domain wrong = Domain::full(4);
  CHECK_THROWS_AS(exhaustive_best_completion(empty, 6, &wrong),
                  std::invalid_argument);
}

TEST_CASE("random_board is reproducible and unbiased") {
  Rng a(99), b(99);
  CHECK(random_board(8, a) == random_board(8, b));
  Rng c(100);
  int live = 0;
  const int boards = 200;
  for (int t = 0; t < boards; ++t) live += random_board(8, c).live_cells();
  // 12800 fair coin flips: mean 6400, sigma ~57; allow 6 sigma.
  CHECK(live > 6050);
  CHECK(live < 6750);
}
