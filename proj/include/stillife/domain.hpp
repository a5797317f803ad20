#pragma once

#include <cstdint>
#include <vector>

#include "stillife/row.hpp"

namespace stillife {

// Candidate row values shared by every row variable: all 2^n rows, the 2^ceil(n/2)
// palindromic rows (vertically symmetric boards), or an explicit subset (the
// recombination operator's parent pool). Values are kept sorted and unique so
// that "lowest domain index" tie-breaking is well defined.
class Domain {
 public:
  // All 2^n rows. Rejects n > 10 unless force is set: the elimination tables
  // are d^2 entries and the sweeps d^3 per level, which grows out of hand fast.
  static Domain full(int n, bool force = false);

  // All palindromic rows (each row its own mirror image), 2^ceil(n/2) values.
  static Domain symmetric(int n);

  // Explicit row set; sorts and deduplicates.
  static Domain from_rows(std::vector<std::uint32_t> rows, int n);

  int width() const { return n_; }
  int size() const { return static_cast<int>(values_.size()); }
  std::uint32_t operator[](int i) const {
    return values_[static_cast<size_t>(i)];
  }
  const std::vector<std::uint32_t>& values() const { return values_; }

  // True iff the mirror image of every member is also a member (holds for
  // full and symmetric domains; required by the half-table solver).
  bool closed_under_reflection() const;

 private:
  Domain(int n, std::vector<std::uint32_t> values);
  int n_;
  std::vector<std::uint32_t> values_;
};

}  // namespace stillife
