#include "stillife/oracle.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "stillife/life.hpp"
#include "stillife/wcsp.hpp"

namespace stillife {

OracleResult exhaustive_opt(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("exhaustive_opt handles n in 1..4, got " +
                                std::to_string(n));
  std::uint64_t total = std::uint64_t{1} << (n * n);
  OracleResult res{Cost::inf(), std::nullopt, total};
  for (std::uint64_t code = 0; code < total; ++code) {
    Board b(n);
    for (int i = 0; i < n; ++i)
      b.set_row(i, static_cast<std::uint32_t>(code >> (i * n)) & row_mask(n));
    if (!is_still_life(b)) continue;
    Cost dead = Cost::finite(std::int64_t(n) * n - b.live_cells());
    if (dead < res.opt) {
      res.opt = dead;
      res.board = b;
    }
  }
  std::fprintf(stderr, "[oracle] exhaustive_opt n=%d enumerated %llu boards\n",
               n, static_cast<unsigned long long>(total));
  return res;
}

namespace {

struct CompletionSearch {
  int n;
  const std::vector<std::uint32_t>* candidates;
  std::vector<std::uint32_t> rows;
  Cost best = Cost::inf();
  std::optional<Board> best_board;
  std::uint64_t tried = 0;

  void dfs(Cost prefix) {
    if (!prefix.is_finite()) return;  // saturating sums: nothing below recovers
    if (static_cast<int>(rows.size()) == n) {
      Board b = Board::from_rows(rows, n);
      Cost t = total_cost(b);
      if (t < best) {
        best = t;
        best_board = b;
      }
      return;
    }
    for (std::uint32_t r : *candidates) {
      ++tried;
      rows.push_back(r);
      dfs(partial_cost(rows, n));
      rows.pop_back();
    }
  }
};

}  // namespace

OracleResult exhaustive_best_completion(std::span<const std::uint32_t> prefix,
                                        int n, const Domain* domain) {
  int k = static_cast<int>(prefix.size());
  if (k > n)
    throw std::invalid_argument("prefix of " + std::to_string(k) +
                                " rows on an n=" + std::to_string(n) + " board");
  std::vector<std::uint32_t> all_rows;
  if (domain == nullptr) {
    if (n > 8 || n - k > 4)
      throw std::invalid_argument(
          "unrestricted completion search needs n <= 8 and n-k <= 4 (n=" +
          std::to_string(n) + ", k=" + std::to_string(k) + ")");
    all_rows.reserve(std::size_t{1} << n);
    for (std::uint32_t r = 0; r <= row_mask(n); ++r) all_rows.push_back(r);
  } else {
    if (domain->width() != n)
      throw std::invalid_argument("domain width does not match n");
    all_rows = domain->values();
  }

  CompletionSearch s;
  s.n = n;
  s.candidates = &all_rows;
  s.rows.assign(prefix.begin(), prefix.end());
  s.dfs(partial_cost(s.rows, n));
  // Report only searches big enough to be worth a log line; property tests
  // call this thousands of times on tiny prefixes.
  if (s.tried >= 100000)
    std::fprintf(stderr,
                 "[oracle] best_completion n=%d k=%d tried %llu row extensions\n",
                 n, k, static_cast<unsigned long long>(s.tried));
  return OracleResult{s.best, s.best_board, s.tried};
}

Board random_board(int n, Rng& rng) {
  Board b(n);
  for (int i = 0; i < n; ++i)
    b.set_row(i, static_cast<std::uint32_t>(rng.next_u64()) & row_mask(n));
  return b;
}

}  // namespace stillife
