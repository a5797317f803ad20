#include "stillife/bucket_elim.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "stillife/wcsp.hpp"

namespace stillife {

namespace {

inline bool interior_ok(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                        int n) {
  std::uint32_t triple = a & b & c;
  if ((triple & 1u) != 0 || (triple >> (n - 1)) != 0) return false;
  return row_stable(a, b, c, n);
}

// Shared machinery of the backward sweeps. Table semantics: g_i(a, b) is the
// cheapest way to finish rows i-1..n given r_{i-2} = a and r_{i-1} = b; it
// charges the dead cells and stability of rows i-1..n. The last-level link
// table seeds the recursion (g_n folds the bottom row in directly).
struct Sweeper {
  int n, d;
  const Domain& dom;
  BEStats* stats;
  CostTable last_t;           // last_t(b, c) = cost of row n = c below row n-1 = b
  std::vector<int> dead;      // dead cells per domain value

  Sweeper(int n_, const Domain& dom_, BEStats* stats_)
      : n(n_), d(dom_.size()), dom(dom_), stats(stats_), last_t(d) {
    dead.resize(static_cast<size_t>(d));
    for (int b = 0; b < d; ++b) dead[static_cast<size_t>(b)] = dead_cells(dom[b], n);
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) last_t.at(b, c) = last_row_cost(dom[b], dom[c], n);
  }

  // One elimination: g(a, b) = dead(b) + min over c of next(b, c) subject to
  // the interior link being satisfiable. Walking candidates in ascending
  // (next value, index) order makes the first feasible hit the minimum with
  // the lowest-index tie-break, identical to a full scan.
  CostTable eliminate(const CostTable& next) {
    CostTable g(d);
    std::vector<std::pair<std::int64_t, int>> order(static_cast<size_t>(d));
    for (int b = 0; b < d; ++b) {
      for (int c = 0; c < d; ++c)
        order[static_cast<size_t>(c)] = {next.at(b, c).raw(), c};
      std::sort(order.begin(), order.end());
      Cost base = Cost::finite(dead[static_cast<size_t>(b)]);
      for (int a = 0; a < d; ++a) {
        if (stats) ++stats->pair_cells;
        for (const auto& [raw, c] : order) {
          if (!Cost::from_raw(raw).is_finite()) break;
          if (stats) ++stats->cand_evals;
          if (interior_ok(dom[a], dom[b], dom[c], n)) {
            g.at(a, b) = base + Cost::from_raw(raw);
            break;
          }
        }
      }
    }
    return g;
  }

  // All tables for levels lo..n; result[i - lo] is g_i.
  std::vector<CostTable> backward_all(int lo) {
    std::vector<CostTable> tables(static_cast<size_t>(n - lo + 1));
    CostTable cur = eliminate(last_t);
    tables[static_cast<size_t>(n - lo)] = cur;
    for (int i = n - 1; i >= lo; --i) {
      cur = eliminate(tables[static_cast<size_t>(i + 1 - lo)]);
      tables[static_cast<size_t>(i - lo)] = cur;
    }
    return tables;
  }

  // g_level only, keeping a rolling table (the low-memory path).
  CostTable backward_single(int level) {
    CostTable cur = eliminate(last_t);
    for (int i = n - 1; i >= level; --i) cur = eliminate(cur);
    return cur;
  }
};

// Table accessor that either reads the retained tables or recomputes a level
// with a fresh rolling sweep.
struct TableSource {
  Sweeper& sweep;
  int lo;
  const std::vector<CostTable>* all;  // null in low-memory mode

  CostTable get(int level) const {
    if (all) return (*all)[static_cast<size_t>(level - lo)];
    return sweep.backward_single(level);
  }
};

BESolution finish(const Sweeper& sweep, std::vector<int> idx, Cost opt) {
  std::vector<std::uint32_t> rows;
  rows.reserve(idx.size());
  for (int i : idx) rows.push_back(sweep.dom[i]);
  Board board = Board::from_rows(std::move(rows), sweep.n);
  if (total_cost(board) != opt)
    throw std::logic_error("reconstructed board does not match the optimum");
  return BESolution{opt, board};
}

BESolution solve_plain(int n, const Domain& dom, const BEOptions& opts,
                       BEStats* stats) {
  Sweeper sweep(n, dom, stats);
  int d = sweep.d;
  if (d == 0) return {};

  std::vector<CostTable> all;
  if (!opts.low_memory) all = sweep.backward_all(3);
  TableSource tables{sweep, 3, opts.low_memory ? nullptr : &all};

  CostTable g3 = tables.get(3);
  Cost opt = Cost::inf();
  int a_idx = -1, b_idx = -1;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Cost v = g3.at(a, b) + first_row_cost(dom[a], dom[b], n);
      if (v < opt) {
        opt = v;
        a_idx = a;
        b_idx = b;
      }
    }
  if (!opt.is_finite()) return {};

  std::vector<int> idx(static_cast<size_t>(n), -1);
  idx[0] = a_idx;
  idx[1] = b_idx;
  for (int i = 3; i <= n - 1; ++i) {
    CostTable gnext = tables.get(i + 1);
    Cost best = Cost::inf();
    for (int c = 0; c < d; ++c) {
      Cost v = interior_row_cost(dom[idx[static_cast<size_t>(i - 3)]],
                                 dom[idx[static_cast<size_t>(i - 2)]], dom[c], n) +
               gnext.at(idx[static_cast<size_t>(i - 2)], c);
      if (v < best) {
        best = v;
        idx[static_cast<size_t>(i - 1)] = c;
      }
    }
  }
  {
    Cost best = Cost::inf();
    for (int c = 0; c < d; ++c) {
      Cost v = interior_row_cost(dom[idx[static_cast<size_t>(n - 3)]],
                                 dom[idx[static_cast<size_t>(n - 2)]], dom[c], n) +
               sweep.last_t.at(idx[static_cast<size_t>(n - 2)], c);
      if (v < best) {
        best = v;
        idx[static_cast<size_t>(n - 1)] = c;
      }
    }
  }
  return finish(sweep, std::move(idx), opt);
}

}  // namespace

BESolution be_solve(int n, const Domain& dom, const BEOptions& opts,
                    BEStats* stats) {
  if (n < 3)
    throw std::invalid_argument("be_solve needs n >= 3 (use the exhaustive "
                                "search for smaller boards)");
  if (dom.width() != n) throw std::invalid_argument("domain width != n");
  return solve_plain(n, dom, opts, stats);
}

BESolution be_solve_symmetric_opt(int n, const Domain& dom,
                                  const BEOptions& opts, BEStats* stats) {
  if (n < 3)
    throw std::invalid_argument("be_solve_symmetric_opt needs n >= 3");
  if (dom.width() != n) throw std::invalid_argument("domain width != n");
  // The half-table identity needs mirror closure; n=3 has no half to save.
  if (n == 3 || !dom.closed_under_reflection())
    return solve_plain(n, dom, opts, stats);

  Sweeper sweep(n, dom, stats);
  int d = sweep.d;
  if (d == 0) return {};

  // Eliminate only rows n..j+2. A board flipped upside down and mirrored is
  // an equivalent board, so the top-half tables are transposes of bottom-half
  // ones: H_k(u, v) = G_{n+2-k}(v, u), where H_k(u, v) is the cheapest way to
  // fill rows 1..k given r_k = u, r_{k+1} = v. Splitting between rows j and
  // j+1 then pairs two retained tables.
  int j = n / 2;
  int lo = j + 2;
  int top = n + 2 - j;  // == lo for even n, lo + 1 for odd

  std::vector<CostTable> all;
  if (!opts.low_memory) all = sweep.backward_all(lo);
  TableSource tables{sweep, lo, opts.low_memory ? nullptr : &all};

  CostTable g_lo = tables.get(lo);
  CostTable g_top = (top == lo) ? g_lo : tables.get(top);

  Cost opt = Cost::inf();
  int u_idx = -1, v_idx = -1;
  for (int u = 0; u < d; ++u)
    for (int v = 0; v < d; ++v) {
      Cost c = g_top.at(v, u) + g_lo.at(u, v);
      if (c < opt) {
        opt = c;
        u_idx = u;
        v_idx = v;
      }
    }
  if (!opt.is_finite()) return {};

  std::vector<int> idx(static_cast<size_t>(n), -1);
  idx[static_cast<size_t>(j - 1)] = u_idx;  // r_j
  idx[static_cast<size_t>(j)] = v_idx;      // r_{j+1}

  // Bottom half forward, as in the plain solver.
  for (int i = j + 2; i <= n - 1; ++i) {
    CostTable gnext = tables.get(i + 1);
    Cost best = Cost::inf();
    for (int c = 0; c < d; ++c) {
      Cost v = interior_row_cost(dom[idx[static_cast<size_t>(i - 3)]],
                                 dom[idx[static_cast<size_t>(i - 2)]], dom[c], n) +
               gnext.at(idx[static_cast<size_t>(i - 2)], c);
      if (v < best) {
        best = v;
        idx[static_cast<size_t>(i - 1)] = c;
      }
    }
  }
  {
    Cost best = Cost::inf();
    for (int c = 0; c < d; ++c) {
      Cost v = interior_row_cost(dom[idx[static_cast<size_t>(n - 3)]],
                                 dom[idx[static_cast<size_t>(n - 2)]], dom[c], n) +
               sweep.last_t.at(idx[static_cast<size_t>(n - 2)], c);
      if (v < best) {
        best = v;
        idx[static_cast<size_t>(n - 1)] = c;
      }
    }
  }

  // Top half upward through the transposed tables:
  // r_{k-1} = argmin_w H_{k-1}(w, r_k) + link(w, r_k, r_{k+1}), and
  // H_{k-1}(w, u) = G_{n+3-k}(u, w).
  for (int k = j; k >= 3; --k) {
    CostTable gmirror = tables.get(n + 3 - k);
    Cost best = Cost::inf();
    for (int w = 0; w < d; ++w) {
      Cost v = gmirror.at(idx[static_cast<size_t>(k - 1)], w) +
               interior_row_cost(dom[w], dom[idx[static_cast<size_t>(k - 1)]],
                                 dom[idx[static_cast<size_t>(k)]], n);
      if (v < best) {
        best = v;
        idx[static_cast<size_t>(k - 2)] = w;
      }
    }
  }
  {
    Cost best = Cost::inf();
    for (int w = 0; w < d; ++w) {
      Cost v = first_row_cost(dom[w], dom[idx[1]], n) +
               interior_row_cost(dom[w], dom[idx[1]], dom[idx[2]], n);
      if (v < best) {
        best = v;
        idx[0] = w;
      }
    }
  }
  return finish(sweep, std::move(idx), opt);
}

BESolution be_recombine(const std::vector<Board>& parents, bool use_columns,
                        BEStats* stats) {
  if (parents.empty()) throw std::invalid_argument("no parents to recombine");
  int n = parents.front().size();
  for (const Board& p : parents)
    if (p.size() != n)
      throw std::invalid_argument("parents have mismatched board sizes");
  if (n < 3)
    throw std::invalid_argument("be_recombine needs n >= 3");
  std::vector<std::uint32_t> pool;
  pool.reserve(static_cast<size_t>(parents.size()) * (use_columns ? 2u : 1u) *
               static_cast<size_t>(n));
  for (const Board& p : parents) {
    for (int i = 0; i < n; ++i) pool.push_back(p.row(i));
    if (use_columns)
      for (int j = 0; j < n; ++j) pool.push_back(p.column(j));
  }
  return be_solve(n, Domain::from_rows(std::move(pool), n), {}, stats);
}

}  // namespace stillife
