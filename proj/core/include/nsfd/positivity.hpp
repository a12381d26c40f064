#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nsfd/lyapunov.hpp"
#include "nsfd/ode_system.hpp"
#include "nsfd/state.hpp"

namespace nsfd {

/// Per-component positivity bound:
///
///   tau*_i(y) = 0              if f_i(y) >= 0,
///               -f_i(y) / y_i  otherwise.
///
/// Requires y >= 0. Throws HypothesisViolation when f_i(y) < 0 on the face
/// y_i = 0, since no finite weight keeps y_i nonnegative there.
double tau_star(const OdeSystem& sys, const State& y, std::size_t i);

/// max_i tau*_i(y).
double tau_positivity(const OdeSystem& sys, const State& y);

/// max(tau_L(y), tau_P(y)) + margin. Satisfies both the Lyapunov and the
/// positivity lower bound at y.
double tau_combined(const QuadraticLyapunov& v, const OdeSystem& sys, const State& y,
                    double margin);

struct FaceViolation {
  std::size_t face;  // index i of the face y_i = 0
  State point;
  double rate;  // f_i(point) < 0
};

/// Falsification-only check of quasi-positivity: f_i >= 0 on every face
/// y_i = 0 of the box [0, upper]. Draws `samples` uniform points per face and
/// reports each one where f_i < -1e-12. An empty report is not a proof.
std::vector<FaceViolation> check_quasi_positivity(const OdeSystem& sys, std::size_t samples,
                                                  const std::vector<double>& upper,
                                                  std::uint64_t seed);

}  // namespace nsfd
