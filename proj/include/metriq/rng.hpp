#pragma once

#include <cstdint>

namespace metriq {

// SplitMix64 generator. All randomness in the library flows through this so
// that results are reproducible bit-for-bit across platforms; the standard
// <random> distributions are implementation-defined and would break that.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Independent stream for one sample index. Streams derived from the same seed
// but different indices are decorrelated, so samples can be evaluated in any
// order (or in parallel) without changing results.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ 0x6A09E667F3BCC909ULL);
  g.state += (index + 1) * 0x9E3779B97F4A7C15ULL;
  g.next();
  g.next();
  return g;
}

}  // namespace metriq
