#include "deaic/rng.hpp"

#include <cmath>

namespace deaic {

double SplitMix64::next_unit() {
  return static_cast<double>((next() >> 11) + 1) * 0x1p-53;
}

double SplitMix64::next_normal() {
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

std::uint64_t fmix64(std::uint64_t k) {
  k ^= k >> 33;
  k *= 0xFF51AFD7ED558CCDULL;
  k ^= k >> 33;
  k *= 0xC4CEB9FE1A85EC53ULL;
  k ^= k >> 33;
  return k;
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(fmix64(seed ^ fmix64(index + 1)));
}

}  // namespace deaic
