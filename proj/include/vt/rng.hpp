#pragma once

#include <cstdint>

#include "vt/types.hpp"

namespace vt {

/// splitmix64; identical sequences on every platform, which keeps seeded CLI
/// runs and frozen test draws byte-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Complex complex_in(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    return {re, uniform(im_lo, im_hi)};
  }

  bool coin() { return (next_u64() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace vt
