// Copyright (c) the gjacobi contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GJACOBI_RNG_HPP
#define GJACOBI_RNG_HPP

#include <cstdint>

namespace gjacobi {

/// SplitMix64: the fixed PRNG behind every seeded randomized check, so that
/// reports are reproducible bit-for-bit across platforms. Constants are the
/// standard ones (Steele/Lea/Flood); see README for the exact update rule.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1].
  double uniform_pm1() { return 2.0 * uniform01() - 1.0; }

  /// Uniform integer in [1, bound]. bound must be >= 1.
  int uniform_index(int bound) {
    return 1 + static_cast<int>(next() % static_cast<std::uint64_t>(bound));
  }

 private:
  std::uint64_t state_;
};

}  // namespace gjacobi

#endif  // GJACOBI_RNG_HPP
