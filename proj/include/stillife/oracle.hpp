#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "stillife/board.hpp"
#include "stillife/cost.hpp"
#include "stillife/domain.hpp"
#include "stillife/rng.hpp"

// Brute-force reference searches. Deliberately dumb: they enumerate, test with
// the one-generation step rule or the plain link sums, and keep the minimum.
// Never on a performance path; used to pin down expected values in tests and
// to cross-check the elimination solvers. Searches that enumerate a lot print
// how much, so test logs show the heavy runs actually happened.

namespace stillife {

struct OracleResult {
  Cost opt;
  std::optional<Board> board;  // first minimum in enumeration order
  std::uint64_t enumerated;
};

// Minimum dead-cell count over all still lifes of size n, by enumerating all
// 2^(n*n) boards and testing each with the step rule. n <= 4. Ties resolve to
// the smallest board integer (row-major, row 0 in the low bits).
OracleResult exhaustive_opt(int n);

// Minimum total_cost over all boards extending the given row prefix,
// depth-first over the remaining rows. Prefixes whose partial cost is already
// infinite only ever extend to infinite boards and are cut off; no other
// pruning. Candidate rows come from `domain` when given, else all 2^n rows,
// in which case n <= 8 and n - k <= 4 are required to keep the search sane.
OracleResult exhaustive_best_completion(std::span<const std::uint32_t> prefix,
                                        int n,
                                        const Domain* domain = nullptr);

// Uniform random board: every cell independently alive with probability 1/2.
Board random_board(int n, Rng& rng);

}  // namespace stillife
