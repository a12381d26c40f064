#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nsfd/lyapunov.hpp"
#include "nsfd/nsfd_scheme.hpp"
#include "nsfd/state.hpp"

namespace nsfd {

// Randomized checks of the two structural guarantees of the NSFD scheme.
// Each check is deterministic for a given seed.

struct Counterexample {
  State y;
  double dt;
  double value;
  std::string detail;
};

struct PropertyReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Counterexample> violations;
  /// Trajectories that ended on a face where the system itself points out of
  /// the orthant (no weight can be formed there). Not a property violation.
  std::vector<Counterexample> stopped;

  bool passed() const noexcept { return violations.empty(); }
};

struct SamplingRanges {
  /// States are drawn uniformly from the box |y - y*|_inf <= state_radius and
  /// redrawn if closer than min_distance to y*.
  double state_radius = 10.0;
  double min_distance = 1e-6;
  /// Step sizes are log-uniform on [dt_min, dt_max].
  double dt_min = 1e-6;
  double dt_max = 1e3;
  /// Clip the box to the nonnegative orthant (for positivity-based weights).
  bool nonnegative = false;
};

/// Draws a state uniformly from the sampling box around `center`.
State sample_state(std::mt19937_64& rng, const State& center, const SamplingRanges& ranges);

/// V(nsfd_step(y)) - V(y) < 0 at random (y, dt).
PropertyReport check_lyapunov_decrease(const QuadraticLyapunov& v, const NsfdScheme& scheme,
                                       std::size_t samples, std::uint64_t seed,
                                       const SamplingRanges& ranges = {});

/// |closed form - direct| <= tolerance * max(1, |direct|) at random (y, dt).
PropertyReport check_closed_form_identity(const QuadraticLyapunov& v, const NsfdScheme& scheme,
                                          std::size_t samples, std::uint64_t seed,
                                          double tolerance = 1e-10,
                                          const SamplingRanges& ranges = {});

struct PositivityRanges {
  double upper = 10.0;  // initial states uniform in [0, upper]^n
  double dt_min = 1e-3;
  double dt_max = 1e2;
  std::size_t steps = 200;
  double tolerance = 1e-14;  // iterates must stay >= -tolerance
};

/// Every iterate of `steps` NSFD steps from random nonnegative states stays
/// in the nonnegative orthant. One sample is one trajectory. A trajectory that
/// lands exactly on a face with f_i < 0 there cannot continue; it is recorded
/// in `stopped` rather than as a violation.
PropertyReport check_positivity_invariance(const NsfdScheme& scheme, std::size_t samples,
                                           std::uint64_t seed,
                                           const PositivityRanges& ranges = {});

}  // namespace nsfd
