#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace nsfd {

// Portable uniform draws (std::uniform_real_distribution is
// implementation-defined, which would break cross-platform reproducibility).

/// Uniform on [0, 1) with 53 random bits.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

/// exp of a uniform draw on [log lo, log hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace nsfd
