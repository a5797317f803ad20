#include "stillife/life.hpp"

#include <stdexcept>
#include <string>

namespace stillife {

namespace {

// Cell state of the embedded view; reads anywhere outside the board (frame or
// beyond) are dead. Embedded coordinates.
inline bool embedded_cell(const Board& b, int i, int j) {
  int n = b.size();
  if (i < 1 || i > n || j < 1 || j > n) return false;
  return b.cell(i - 1, j - 1);
}

inline void check_embedded(const Board& b, int i, int j, const char* op) {
  int n = b.size();
  if (i < 0 || i > n + 1 || j < 0 || j > n + 1)
    throw std::out_of_range(std::string(op) + ": embedded coordinates (" +
                            std::to_string(i) + ", " + std::to_string(j) +
                            ") outside 0.." + std::to_string(n + 1));
}

inline int count_neighbors(const Board& b, int i, int j) {
  int c = 0;
  for (int di = -1; di <= 1; ++di)
    for (int dj = -1; dj <= 1; ++dj)
      if (di != 0 || dj != 0) c += embedded_cell(b, i + di, j + dj);
  return c;
}

// Penalty of a dead cell with eta live neighbors: only a pending birth
// (eta == 3) violates, with degree 1.
inline std::int64_t phi_dead(int eta, std::int64_t kp) {
  return eta == 3 ? kp + 1 : 0;
}

// Penalty of a live cell: stable at 2..3 neighbors, otherwise the degree grows
// with the distance from the stable range.
inline std::int64_t phi_live(int eta, std::int64_t kp) {
  if (eta >= 2 && eta <= 3) return 0;
  return eta < 2 ? kp + 2 - eta : kp + eta - 3;
}

inline std::int64_t phi(bool alive, int eta, std::int64_t kp) {
  return alive ? phi_live(eta, kp) : phi_dead(eta, kp);
}

}  // namespace

Board embed(const Board& b) {
  int n = b.size();
  Board e(n + 2);
  for (int i = 0; i < n; ++i) e.set_row(i + 1, b.row(i) << 1);
  return e;
}

int neighbor_count(const Board& b, int i, int j) {
  check_embedded(b, i, j, "neighbor_count");
  return count_neighbors(b, i, j);
}

bool is_cell_stable(const Board& b, int i, int j) {
  check_embedded(b, i, j, "is_cell_stable");
  int eta = count_neighbors(b, i, j);
  return embedded_cell(b, i, j) ? (eta >= 2 && eta <= 3) : (eta != 3);
}

Board step(const Board& b) {
  int n = b.size();
  Board next(n + 2);
  for (int i = 0; i <= n + 1; ++i)
    for (int j = 0; j <= n + 1; ++j) {
      int eta = count_neighbors(b, i, j);
      bool alive = embedded_cell(b, i, j);
      bool next_alive = eta == 3 || (alive && eta == 2);
      if (next_alive) next.set_cell(i, j, true);
    }
  return next;
}

bool is_still_life(const Board& b) { return step(b) == embed(b); }

FitnessValue fitness(const Board& b) {
  int n = b.size();
  std::int64_t k = std::int64_t(n) * n;
  std::int64_t kp = 5 * k;
  std::int64_t dead = k - b.live_cells();
  std::int64_t penalty = 0;
  for (int i = 0; i <= n + 1; ++i)
    for (int j = 0; j <= n + 1; ++j)
      penalty += phi(embedded_cell(b, i, j), count_neighbors(b, i, j), kp);
  return dead + k * penalty;
}

FitnessValue delta_fitness(const Board& b, int i, int j) {
  int n = b.size();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::out_of_range("delta_fitness: cell (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") outside the board");
  std::int64_t k = std::int64_t(n) * n;
  std::int64_t kp = 5 * k;
  bool was_alive = b.cell(i, j);
  // Flipping changes the flipped cell's own state (same neighbor count) and
  // shifts each window neighbor's count by one; nothing else moves.
  std::int64_t penalty_delta = 0;
  int ci = i + 1, cj = j + 1;  // embedded coords of the flipped cell
  for (int p = ci - 1; p <= ci + 1; ++p)
    for (int q = cj - 1; q <= cj + 1; ++q) {
      bool alive = embedded_cell(b, p, q);
      int eta = count_neighbors(b, p, q);
      std::int64_t before = phi(alive, eta, kp);
      std::int64_t after;
      if (p == ci && q == cj)
        after = phi(!alive, eta, kp);
      else
        after = phi(alive, eta + (was_alive ? -1 : 1), kp);
      penalty_delta += after - before;
    }
  return (was_alive ? 1 : -1) + k * penalty_delta;
}

int violation_count(const Board& b) {
  int n = b.size();
  int count = 0;
  for (int i = 0; i <= n + 1; ++i)
    for (int j = 0; j <= n + 1; ++j)
      if (!is_cell_stable(b, i, j)) ++count;
  return count;
}

std::int64_t violation_degree(const Board& b) {
  int n = b.size();
  std::int64_t total = 0;
  for (int i = 0; i <= n + 1; ++i)
    for (int j = 0; j <= n + 1; ++j) {
      std::int64_t p = phi(embedded_cell(b, i, j), count_neighbors(b, i, j), 1);
      if (p > 0) total += p - 1;  // strip K' to leave the bare degree
    }
  return total;
}

}  // namespace stillife
