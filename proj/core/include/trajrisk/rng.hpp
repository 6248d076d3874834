#pragma once

#include <cmath>
#include <cstdint>

namespace trajrisk {

/// Small counter-friendly generator (splitmix64). Each stream is derived
/// from a (master seed, counter) pair, so sample i of a Monte Carlo run
/// produces the same draws no matter how samples are batched or threaded.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t counter)
      : state_(mix(master_seed ^ (0x9E3779B97F4A7C15ULL * (counter + 1)))) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller. Draws two uniforms per call.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    // Guard against log(0).
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 33)) * 0xFF51AFD7ED558CCDULL;
    z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ULL;
    return z ^ (z >> 33);
  }

  std::uint64_t state_;
};

}  // namespace trajrisk
