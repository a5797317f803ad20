#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stillife/board.hpp"
#include "stillife/cost.hpp"
#include "stillife/domain.hpp"

namespace stillife {

// d x d cost table over domain-index pairs.
struct CostTable {
  int d = 0;
  std::vector<Cost> cells;

  explicit CostTable(int dim = 0)
      : d(dim), cells(static_cast<size_t>(dim) * static_cast<size_t>(dim),
                      Cost::inf()) {}
  Cost at(int a, int b) const {
    return cells[static_cast<size_t>(a) * static_cast<size_t>(d) +
                 static_cast<size_t>(b)];
  }
  Cost& at(int a, int b) {
    return cells[static_cast<size_t>(a) * static_cast<size_t>(d) +
                 static_cast<size_t>(b)];
  }
};

struct BESolution {
  Cost opt = Cost::inf();
  std::optional<Board> board;  // present iff opt is finite
};

struct BEOptions {
  // Keep only a rolling pair of tables during the backward sweep and redo
  // partial sweeps during reconstruction; O(d^2) memory instead of O(n d^2),
  // at roughly n times the work.
  bool low_memory = false;
};

// Operation counters for the complexity guard tests.
struct BEStats {
  std::uint64_t pair_cells = 0;  // (a, b, level) table cells computed
  std::uint64_t cand_evals = 0;  // candidate rows examined across all minima
};

// Exact minimum dead-cell count over boards whose every row is drawn from the
// domain, by non-serial dynamic programming over the row chain: eliminate
// rows n..3 into d x d tables, pick the best first pair, then walk the tables
// forward to reconstruct an optimal board. Ties always resolve to the lowest
// domain index, so the result is deterministic. n >= 3.
BESolution be_solve(int n, const Domain& domain, const BEOptions& opts = {},
                    BEStats* stats = nullptr);

// Same optimum value with about half the elimination work: a still life read
// upside down and mirrored is a still life, so the tables for the top half of
// the board are transposes of the bottom-half ones. Requires a domain closed
// under reflection (falls back to be_solve otherwise, as for n = 3).
BESolution be_solve_symmetric_opt(int n, const Domain& domain,
                                  const BEOptions& opts = {},
                                  BEStats* stats = nullptr);

// Best board whose rows are all drawn from the parents' rows (and columns,
// when use_columns is set): exact recombination by be_solve over the pooled
// domain. The parents themselves are in the search space, so with feasible
// parents the child's cost never exceeds the best parent's. opt = infinity
// means the pool admits no still life at all.
BESolution be_recombine(const std::vector<Board>& parents, bool use_columns,
                        BEStats* stats = nullptr);

}  // namespace stillife
