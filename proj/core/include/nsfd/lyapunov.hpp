#pragma once

#include <vector>

#include "nsfd/ode_system.hpp"
#include "nsfd/state.hpp"

namespace nsfd {

/// V(y) = sum_i alpha_i (y_i - c_i)^2 with every alpha_i > 0.
class QuadraticLyapunov {
 public:
  QuadraticLyapunov(std::vector<double> alphas, State center);

  std::size_t dimension() const noexcept { return alphas_.size(); }
  const std::vector<double>& alphas() const noexcept { return alphas_; }
  const State& center() const noexcept { return center_; }

  double operator()(const State& y) const;

 private:
  std::vector<double> alphas_;
  State center_;
};

/// True when max_i |y_i - c_i| <= 1e-12 * (1 + |c|_inf). States inside this
/// ball are treated as the equilibrium itself.
bool at_equilibrium(const State& y, const State& center);

double lyapunov_value(const QuadraticLyapunov& v, const State& y);

/// Rate of change of V along the flow: 2 sum_i alpha_i (y_i - c_i) f_i(y).
double lyapunov_rate(const QuadraticLyapunov& v, const OdeSystem& sys, const State& y);

/// Smallest weight for which the NSFD update decreases V at `y`:
///
///   tau_L(y) = - sum_i alpha_i f_i(y)^2 / Vdot(y).
///
/// Throws HypothesisViolation at the equilibrium (0/0) and wherever the rate
/// is not strictly negative.
double tau_lyapunov_bound(const QuadraticLyapunov& v, const OdeSystem& sys, const State& y);

/// sum_i alpha_i f_i^2 for a precomputed field value.
double weighted_square_sum(const QuadraticLyapunov& v, const State& f);

/// 2 sum_i alpha_i (y_i - c_i) f_i for a precomputed field value.
double rate_from_field(const QuadraticLyapunov& v, const State& y, const State& f);

}  // namespace nsfd
