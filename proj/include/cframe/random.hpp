#pragma once

#include <cstdint>

namespace cframe {

/// SplitMix64. The whole generator state is the public 64-bit counter, so a
/// seed fully determines every draw on every platform:
///   state += 0x9E3779B97F4A7C15
///   z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() noexcept {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() noexcept { return 2.0 * uniform() - 1.0; }

  /// Integer in [0, n). Plain modulo; the bias is irrelevant at these sizes.
  std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }
};

}  // namespace cframe
