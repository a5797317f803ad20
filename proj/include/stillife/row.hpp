#pragma once

#include <cassert>
#include <cstdint>

// Rows of an n x n board are bit fields: bit 0 is the leftmost column, bits >= n
// must be zero (n <= 32). Shifting left/right therefore moves a row's cells
// toward higher/lower column indices, and zero bits shifted in model the dead
// frame around the board.

namespace stillife {

inline constexpr int kMaxN = 32;

constexpr std::uint32_t row_mask(int n) {
  return n >= 32 ? ~0u : ((1u << n) - 1u);
}

constexpr int popcount32(std::uint32_t x) { return __builtin_popcount(x); }

// Number of dead cells in a row of width n.
constexpr int dead_cells(std::uint32_t row, int n) {
  return n - popcount32(row);
}

// Length of the longest run of consecutive live cells.
constexpr int longest_run(std::uint32_t row) {
  int len = 0;
  while (row != 0) {
    row &= row >> 1;
    ++len;
  }
  return len;
}

// True iff the row contains three or more consecutive live cells. A lone row
// with such a run would give birth to a cell in the dead frame beside it.
constexpr bool has_run3(std::uint32_t row) {
  return (row & (row >> 1) & (row >> 2)) != 0;
}

// Mirror image of a width-n row.
constexpr std::uint32_t reflect(std::uint32_t row, int n) {
  std::uint32_t r = row;
  r = ((r & 0x55555555u) << 1) | ((r >> 1) & 0x55555555u);
  r = ((r & 0x33333333u) << 2) | ((r >> 2) & 0x33333333u);
  r = ((r & 0x0F0F0F0Fu) << 4) | ((r >> 4) & 0x0F0F0F0Fu);
  r = ((r & 0x00FF00FFu) << 8) | ((r >> 8) & 0x00FF00FFu);
  r = (r << 16) | (r >> 16);
  return r >> (32 - n);
}

// Palindromic row built from a half pattern: half ranges over 0..2^ceil(n/2)-1
// and occupies the left columns; the right half is its mirror image. For odd n
// the middle column belongs to the half pattern.
constexpr std::uint32_t palindrome_from_half(std::uint32_t half, int n) {
  assert(half <= row_mask((n + 1) / 2));
  return half | reflect(half, n);
}

// Per-column count of live cells among {left neighbor, self, right neighbor},
// returned as two bit planes (p0 = ones, p1 = twos). Values range 0..3.
struct Sum3 {
  std::uint32_t p0, p1;
};

constexpr Sum3 sum3(std::uint32_t r) {
  std::uint32_t l = r << 1, h = r >> 1;
  std::uint32_t x = l ^ r;
  return Sum3{x ^ h, (l & r) | (h & x)};
}

// Positions of row b whose cell violates the still-life condition, given the
// rows a above and c below (zero rows stand for the dead frame).
//
// Per column the live count of the 3x3 window including the centre is formed
// with carry-save adders (w = 0..9 in four bit planes). A live cell is stable
// iff w is 3 or 4 (i.e. 2 or 3 neighbors); a dead cell is stable iff w != 3.
constexpr std::uint32_t unstable_cells(std::uint32_t a, std::uint32_t b,
                                       std::uint32_t c, int n) {
  Sum3 sa = sum3(a), sb = sum3(b), sc = sum3(c);
  std::uint32_t x0 = sa.p0 ^ sb.p0;
  std::uint32_t w0 = x0 ^ sc.p0;
  std::uint32_t k1 = (sa.p0 & sb.p0) | (sc.p0 & x0);  // carry into the 2s
  std::uint32_t x1 = sa.p1 ^ sb.p1;
  std::uint32_t t = x1 ^ sc.p1;                        // 2s partial sum
  std::uint32_t u = (sa.p1 & sb.p1) | (sc.p1 & x1);    // carry into the 4s
  std::uint32_t w1 = t ^ k1;
  std::uint32_t u2 = t & k1;                           // second carry into the 4s
  std::uint32_t w2 = u ^ u2;
  std::uint32_t w3 = u & u2;
  std::uint32_t eq3 = ~w3 & ~w2 & w1 & w0;
  std::uint32_t eq4 = ~w3 & w2 & ~w1 & ~w0;
  std::uint32_t stable = (b & (eq3 | eq4)) | (~b & ~eq3);
  return ~stable & row_mask(n);
}

// All cells of row b satisfy the still-life condition between rows a and c.
constexpr bool row_stable(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                          int n) {
  return unstable_cells(a, b, c, n) == 0;
}

}  // namespace stillife
