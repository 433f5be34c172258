#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace gpsort {

// splitmix64 finalizer. Used to derive per-trial seeds from a base seed:
// trial_seed = base_seed ^ mix64(row_index).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seedable 64-bit random stream with portable draws.
//
// The raw mt19937_64 output sequence is pinned by the C++ standard; the
// helpers below replace std::*_distribution, whose outputs differ across
// standard libraries. Every consumer documents its draw order against
// these primitives, so a (seed, config) pair replays bit-identically on
// any platform.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). bound <= 1 short-circuits to 0 without
  // consuming engine output.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // rejection keeps the draw unbiased; rem = 2^64 mod bound
    std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % bound) + 1;
    if (rem == bound) rem = 0;
    std::uint64_t x = next_u64();
    while (rem != 0 && x >= std::uint64_t(0) - rem) x = next_u64();
    return x % bound;
  }

  // Uniform in [0,1) with 53-bit resolution.
  double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Exact Poisson(1) sample, product-of-uniforms form of inverse transform.
  // Tail probabilities P(k >= t) are exact in distribution, which is what
  // the multi-operation stagnation experiments lean on.
  int poisson1() {
    const double threshold = std::exp(-1.0);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform01();
    } while (p > threshold);
    return k - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gpsort
