#include <cstdint>
#include <vector>

#include "doctest.h"
#include "stillife/rng.hpp"
#include "stillife/row.hpp"

using namespace stillife;

namespace {

// Independent per-column reference for the bit-parallel stability kernel:
// lay the three rows out as a cell grid and count neighbors one by one.
std::uint32_t unstable_reference(std::uint32_t a, std::uint32_t b,
                                 std::uint32_t c, int n) {
  auto bit = [](std::uint32_t r, int j) -> int {
    if (j < 0 || j > 31) return 0;
    return (r >> j) & 1u;
  };
  std::uint32_t out = 0;
  for (int j = 0; j < n; ++j) {
    int neighbors = bit(a, j - 1) + bit(a, j) + bit(a, j + 1) + bit(b, j - 1) +
                    bit(b, j + 1) + bit(c, j - 1) + bit(c, j) + bit(c, j + 1);
    bool alive = bit(b, j);
    bool stable = alive ? (neighbors == 2 || neighbors == 3) : neighbors != 3;
    if (!stable) out |= 1u << j;
  }
  return out;
}

}  // namespace

TEST_CASE("row masks and counts") {
  CHECK(row_mask(1) == 1u);
  CHECK(row_mask(5) == 31u);
  CHECK(row_mask(32) == 0xFFFFFFFFu);
  CHECK(dead_cells(0u, 7) == 7);
  CHECK(dead_cells(0b1011u, 4) == 1);
  CHECK(dead_cells(row_mask(9), 9) == 0);
}

TEST_CASE("longest_run and has_run3") {
  CHECK(longest_run(0u) == 0);
  CHECK(longest_run(0b1u) == 1);
  CHECK(longest_run(0b1011u) == 2);
  CHECK(longest_run(0b111u) == 3);
  CHECK(longest_run(0b110111101u) == 4);
  CHECK(longest_run(0xFFFFFFFFu) == 32);

  CHECK(!has_run3(0u));
  CHECK(!has_run3(0b11011u));
  CHECK(has_run3(0b111u));
  CHECK(has_run3(0b1110u));
  CHECK(has_run3(0b1011100u));
  // Agreement with longest_run on random words.
  Rng rng(7);
  for (int t = 0; t < 2000; ++t) {
    std::uint32_t r = static_cast<std::uint32_t>(rng.next_u64());
    CHECK(has_run3(r) == (longest_run(r) >= 3));
  }
}

TEST_CASE("reflect matches the per-bit definition and is an involution") {
  CHECK(reflect(0b001u, 3) == 0b100u);
  CHECK(reflect(0b110u, 3) == 0b011u);
  CHECK(reflect(0b1u, 8) == 0b10000000u);
  Rng rng(11);
  for (int n = 1; n <= 32; ++n) {
    for (int t = 0; t < 200; ++t) {
      std::uint32_t r =
          static_cast<std::uint32_t>(rng.next_u64()) & row_mask(n);
      std::uint32_t m = reflect(r, n);
      CHECK((m & ~row_mask(n)) == 0u);
      for (int j = 0; j < n; ++j)
        CHECK(((m >> j) & 1u) == ((r >> (n - 1 - j)) & 1u));
      CHECK(reflect(m, n) == r);
    }
  }
}

TEST_CASE("palindrome_from_half builds exactly the self-mirrored rows") {
  for (int n : {3, 4, 5, 6, 9, 10}) {
    int half_bits = (n + 1) / 2;
    std::vector<std::uint32_t> seen;
    for (std::uint32_t h = 0; h <= row_mask(half_bits); ++h) {
      std::uint32_t p = palindrome_from_half(h, n);
      CHECK((p & ~row_mask(n)) == 0u);
      CHECK(reflect(p, n) == p);
      // The half occupies the left columns unchanged.
      CHECK((p & row_mask(half_bits)) == h);
      seen.push_back(p);
    }
    // All distinct, and every palindromic row of width n is covered.
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    int count = 0;
    for (std::uint32_t r = 0; r <= row_mask(n); ++r)
      if (reflect(r, n) == r) ++count;
    CHECK(count == static_cast<int>(seen.size()));
  }
}

TEST_CASE("sum3 bit planes equal the per-column neighborhood count") {
  auto bit = [](std::uint32_t r, int j) -> int {
    if (j < 0 || j > 31) return 0;
    return (r >> j) & 1u;
  };
  Rng rng(13);
  std::vector<std::uint32_t> samples = {0u, 1u, 0x80000000u, 0xFFFFFFFFu,
                                        0xAAAAAAAAu, 0x55555555u};
  for (int t = 0; t < 500; ++t)
    samples.push_back(static_cast<std::uint32_t>(rng.next_u64()));
  for (std::uint32_t r : samples) {
    Sum3 s = sum3(r);
    for (int j = 0; j < 32; ++j) {
      int v = bit(r, j - 1) + bit(r, j) + bit(r, j + 1);
      CHECK(((s.p0 >> j) & 1u) == static_cast<std::uint32_t>(v & 1));
      CHECK(((s.p1 >> j) & 1u) == static_cast<std::uint32_t>((v >> 1) & 1));
    }
  }
}

TEST_CASE("unstable_cells: exhaustive width 3, random up to width 12") {
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b)
      for (std::uint32_t c = 0; c < 8; ++c) {
        CHECK(unstable_cells(a, b, c, 3) == unstable_reference(a, b, c, 3));
        CHECK(row_stable(a, b, c, 3) == (unstable_reference(a, b, c, 3) == 0));
      }
  Rng rng(17);
  for (int n = 1; n <= 12; ++n) {
    for (int t = 0; t < 1000; ++t) {
      std::uint32_t a =
          static_cast<std::uint32_t>(rng.next_u64()) & row_mask(n);
      std::uint32_t b =
          static_cast<std::uint32_t>(rng.next_u64()) & row_mask(n);
      std::uint32_t c =
          static_cast<std::uint32_t>(rng.next_u64()) & row_mask(n);
      CHECK(unstable_cells(a, b, c, n) == unstable_reference(a, b, c, n));
    }
  }
}

TEST_CASE("unstable_cells treats zero context rows as the dead frame") {
  // A lone pair of adjacent live cells: each has one neighbor, both unstable.
  CHECK(unstable_cells(0, 0b011u, 0, 4) == 0b011u);
  // Width-2 block rows are mutually stable.
  CHECK(row_stable(0, 0b11u, 0b11u, 2));
  CHECK(row_stable(0b11u, 0b11u, 0, 2));
}
