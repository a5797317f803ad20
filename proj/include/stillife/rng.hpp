#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace stillife {

// splitmix64 step; used to scramble seeds and to derive independent streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d4a9d87cc7aa5eull;
  return x ^ (x >> 31);
}

// Deterministic RNG for the stochastic solvers. mt19937_64 supplies the raw
// stream; the distribution helpers are hand-rolled because std:: distributions
// are implementation-defined and would break seed reproducibility across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  // Derives the seed for an independent sub-stream (e.g. one per replicate or
  // per beam level).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 0x51ed2701ull));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Unbiased uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform integer in [lo, hi], both ends inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace stillife
