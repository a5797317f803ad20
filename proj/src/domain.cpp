#include "stillife/domain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stillife {

Domain::Domain(int n, std::vector<std::uint32_t> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("domain width must be in 1..32, got " +
                                std::to_string(n));
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  for (std::uint32_t v : values_)
    if ((v & ~row_mask(n)) != 0)
      throw std::invalid_argument("domain value has bits beyond column " +
                                  std::to_string(n));
}

Domain Domain::full(int n, bool force) {
  if (n > 10 && !force)
    throw std::invalid_argument(
        "full domain for n=" + std::to_string(n) +
        " needs an explicit override (2^n rows, d^3 sweeps)");
  std::vector<std::uint32_t> v;
  v.reserve(std::size_t{1} << n);
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < count; ++r)
    v.push_back(static_cast<std::uint32_t>(r));
  return Domain(n, std::move(v));
}

Domain Domain::symmetric(int n) {
  int half_bits = (n + 1) / 2;
  std::vector<std::uint32_t> v;
  v.reserve(std::size_t{1} << half_bits);
  for (std::uint32_t h = 0; h <= row_mask(half_bits); ++h)
    v.push_back(palindrome_from_half(h, n));
  return Domain(n, std::move(v));
}

Domain Domain::from_rows(std::vector<std::uint32_t> rows, int n) {
  return Domain(n, std::move(rows));
}

bool Domain::closed_under_reflection() const {
  for (std::uint32_t v : values_)
    if (!std::binary_search(values_.begin(), values_.end(), reflect(v, n_)))
      return false;
  return true;
}

}  // namespace stillife
