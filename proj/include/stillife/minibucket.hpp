#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stillife/cost.hpp"
#include "stillife/row.hpp"

namespace stillife {

// One column segment of the mini-bucket decomposition. A segment owns a
// contiguous block of board columns and reads one extra column on each side
// (clipped at the board edge) so that every owned cell's 3x3 window lies
// inside the scope.
struct Segment {
  int own_start = 0;
  int own_len = 0;
  int scope_start = 0;
  int scope_len = 0;

  std::uint32_t owned_mask() const {
    return row_mask(own_len) << (own_start - scope_start);
  }
  std::uint32_t project(std::uint32_t row) const {
    return (row >> scope_start) & row_mask(scope_len);
  }
};

// Splits n columns into m contiguous segments. Lengths start at n/m; the
// n%m leftover columns go pairwise to the outermost segments working inward,
// with an odd last one landing on the centre segment (centre-left when m is
// even). For m=3 this gives (n/3,n/3,n/3), +1 centre, or +1 on both ends.
std::vector<Segment> make_segments(int n, int m);

enum class RowKind { first, interior, last };

// Cost the segment charges for one row link, evaluated on scope-restricted
// patterns a (row above), b (charged row), c (row below). Checks stability of
// the owned cells of b only, the no-birth run-of-three condition centred on
// owned cells for first/last rows, and the side-frame triple condition when
// the segment touches a board edge. Finite value = dead owned cells of b.
// Summed over all segments of a layout this reproduces the full link cost
// exactly, because ownership partitions every check and every dead cell.
Cost segment_cost(const Segment& seg, int n, RowKind kind, std::uint32_t a,
                  std::uint32_t b, std::uint32_t c);

// Per-segment suffix tables in the style of bucket elimination, but with each
// segment minimized independently over its own scope patterns. The sum over
// segments lower-bounds the true best completion of any row prefix.
class MiniBucketTables {
 public:
  // Builds tables for all levels. Throws std::invalid_argument when n < 3,
  // m is out of 1..n, or some scope exceeds scope_cap bits.
  MiniBucketTables(int n, int m, int scope_cap = kDefaultScopeCap);

  static constexpr int kDefaultScopeCap = 10;

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Segment>& segments() const { return segs_; }

  // Sum over segments of the level-(k+1) table entry for a prefix ending in
  // rows (r_prev, r_k). Lower-bounds the cost charged to rows k..n by any
  // completion. Valid for 2 <= k <= n; at k = n it reduces to the segment
  // last-row costs.
  Cost suffix_bound(int k, std::uint32_t r_prev, std::uint32_t r_k) const;

  // partial_cost of the prefix plus suffix_bound (plain partial_cost when the
  // prefix is shorter than two rows). Admissible: never exceeds the cheapest
  // total cost of any full board extending the prefix.
  Cost lower_bound(const std::vector<std::uint32_t>& rows) const;

  // Native-endian cache of the tables; load returns nullopt on any mismatch.
  bool save(const std::string& path) const;
  static std::optional<MiniBucketTables> load(const std::string& path);
  static std::string cache_name(int n, int m);

 private:
  MiniBucketTables() = default;

  static constexpr std::uint16_t kCellInf = 0xFFFF;

  int n_ = 0;
  int m_ = 0;
  std::vector<Segment> segs_;
  // tables_[seg][level-3], level in 3..n+1, row-major (a * 2^s + b).
  std::vector<std::vector<std::vector<std::uint16_t>>> tables_;
};

}  // namespace stillife
