#pragma once

#include <cstdint>

namespace mcs {

/// SplitMix64 (Vigna's public-domain mixer): a portable 64-bit generator
/// used for every seeded draw in the project so that experiments reproduce
/// bit-for-bit across platforms and languages. The first outputs for seed 0
/// are kept as a golden file under tests/.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1): the top 53 bits of one output.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
  }

  /// Uniform integer in [0, n): floor(uniform01() * n). One draw per call.
  int below(int n) { return static_cast<int>(uniform01() * n); }

 private:
  std::uint64_t state_;
};

}  // namespace mcs
