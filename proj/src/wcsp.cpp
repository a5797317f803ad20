#include "stillife/wcsp.hpp"

#include <cassert>

namespace stillife {

Cost first_row_cost(std::uint32_t b, std::uint32_t c, int n) {
  if (!row_stable(0, b, c, n) || has_run3(b)) return Cost::inf();
  return Cost::finite(dead_cells(b, n));
}

Cost interior_row_cost(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                       int n) {
  std::uint32_t triple = a & b & c;
  if ((triple & 1u) != 0 || (triple >> (n - 1)) != 0) return Cost::inf();
  if (!row_stable(a, b, c, n)) return Cost::inf();
  return Cost::finite(dead_cells(b, n));
}

Cost last_row_cost(std::uint32_t a, std::uint32_t b, int n) {
  if (!row_stable(a, b, 0, n) || has_run3(b)) return Cost::inf();
  return Cost::finite(dead_cells(b, n));
}

Cost total_cost(const Board& board) {
  int n = board.size();
  if (n == 1) {
    // Single-row board: the frame is the whole context.
    std::uint32_t r = board.row(0);
    if (!row_stable(0, r, 0, n) || has_run3(r)) return Cost::inf();
    return Cost::finite(dead_cells(r, n));
  }
  Cost c = first_row_cost(board.row(0), board.row(1), n);
  for (int i = 1; i + 1 < n; ++i)
    c += interior_row_cost(board.row(i - 1), board.row(i), board.row(i + 1), n);
  c += last_row_cost(board.row(n - 2), board.row(n - 1), n);
  return c;
}

Cost partial_cost(std::span<const std::uint32_t> rows, int n) {
  int k = static_cast<int>(rows.size());
  assert(k <= n);
  if (k <= 1) return Cost::finite(0);
  Cost c = first_row_cost(rows[0], rows[1], n);
  for (int i = 1; i + 1 < k; ++i)
    c += interior_row_cost(rows[static_cast<size_t>(i - 1)],
                           rows[static_cast<size_t>(i)],
                           rows[static_cast<size_t>(i + 1)], n);
  return c;
}

PartialSolution extended(const PartialSolution& p, std::uint32_t next_row,
                         int n) {
  PartialSolution out;
  out.rows.reserve(p.rows.size() + 1);
  out.rows = p.rows;
  out.rows.push_back(next_row);
  int k = out.depth();
  assert(k <= n);
  if (k < 2)
    out.cost = Cost::finite(0);
  else if (k == 2)
    out.cost = first_row_cost(out.rows[0], out.rows[1], n);
  else
    out.cost = p.cost + interior_row_cost(out.rows[static_cast<size_t>(k - 3)],
                                          out.rows[static_cast<size_t>(k - 2)],
                                          out.rows[static_cast<size_t>(k - 1)], n);
  return out;
}

}  // namespace stillife
