#pragma once

#include <cstdint>

namespace deaic {

// Reproducibility contract: every random quantity in this library comes from
// the generator below, so two implementations of the same scheme produce
// identical sample streams for a given seed.
//
//   * Stream: SplitMix64 (Steele/Lea/Vigna). State advances by the constant
//     0x9E3779B97F4A7C15; each output is the finalizing mix of the new state
//     (xor-shift 30, * 0xBF58476D1CE4E5B9, xor-shift 27,
//     * 0x94D049BB133111EB, xor-shift 31).
//   * Uniform doubles: the top 53 bits mapped to (0, 1] as
//     ((x >> 11) + 1) * 2^-53. The interval excludes zero so logarithms
//     are always defined.
//   * Normal deviates: Box-Muller, cosine branch only:
//     z = sqrt(-2 ln u1) * cos(2 pi u2), one deviate per uniform pair.
//   * Substreams: sample index i draws from a fresh SplitMix64 seeded with
//     fmix64(seed ^ fmix64(i + 1)), where fmix64 is the 64-bit MurmurHash3
//     finalizer. Substreams are independent of evaluation order, so results
//     never depend on parallel scheduling.

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in (0, 1].
  double next_unit();

  /// Standard normal deviate (Box-Muller, cosine branch).
  double next_normal();

 private:
  std::uint64_t state_;
};

/// MurmurHash3 64-bit finalizer; bijective scramble.
std::uint64_t fmix64(std::uint64_t k);

/// Generator for the i-th sample of a run: independent of every other index.
SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

}  // namespace deaic
