#pragma once

#include <cassert>
#include <cstdint>
#include <limits>

namespace stillife {

// Cost of a (partial) board in the row-decomposed model: number of dead cells,
// or infinity for assignments that cannot be part of any still life.
// Infinity is a dedicated sentinel, never a "large enough" finite number;
// addition saturates so a violated constraint stays violated.
class Cost {
 public:
  constexpr Cost() : v_(0) {}
  static constexpr Cost finite(std::int64_t v) {
    assert(v >= 0 && v < kInf);
    return Cost(v);
  }
  static constexpr Cost inf() { return Cost(kInf); }

  constexpr bool is_finite() const { return v_ != kInf; }
  constexpr std::int64_t value() const {
    assert(is_finite());
    return v_;
  }
  // Raw representation, used only by table serialization.
  constexpr std::int64_t raw() const { return v_; }
  static constexpr Cost from_raw(std::int64_t v) { return Cost(v); }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (!a.is_finite() || !b.is_finite()) return inf();
    return finite(a.v_ + b.v_);
  }
  Cost& operator+=(Cost o) { return *this = *this + o; }

  // Infinity compares greater than every finite cost.
  friend constexpr bool operator<(Cost a, Cost b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Cost a, Cost b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Cost a, Cost b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Cost a, Cost b) { return a.v_ >= b.v_; }
  friend constexpr bool operator==(Cost a, Cost b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Cost a, Cost b) { return a.v_ != b.v_; }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  explicit constexpr Cost(std::int64_t v) : v_(v) {}
  std::int64_t v_;
};

static_assert(sizeof(Cost) == sizeof(std::int64_t));

}  // namespace stillife
