#pragma once

#include <cstdint>

#include "compass/numeric.hpp"

namespace compass {

// SplitMix64. Reals take the top 53 bits: u = (next() >> 11) * 2^-53, so a
// port in any language reproduces the same fuzz cases from the same seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Point point(double lo, double hi) {
    const double x = uniform(lo, hi);
    return {x, uniform(lo, hi)};
  }
  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace compass
