#pragma once

#include <cstddef>

#include "nsfd/denominator.hpp"
#include "nsfd/lyapunov.hpp"
#include "nsfd/ode_system.hpp"
#include "nsfd/trajectory.hpp"
#include "nsfd/weight.hpp"

namespace nsfd {

/// Explicit nonstandard finite difference scheme
///
///   y_i^{k+1} = y_i^k + phi(dt) f_i(y^k) / (1 + phi(dt) tau(y^k)).
///
/// The update comes from replacing f_i(y) by f_i(y) + y_i tau(y) - y_i' tau(y)
/// (a non-local approximation of zero) in the forward difference quotient.
/// With tau >= tau_L the quadratic Lyapunov function V decreases at every
/// step for every dt > 0; with tau >= tau_P the nonnegative orthant is
/// invariant.
struct NsfdScheme {
  NsfdScheme(OdeSystem system, DenominatorFunction phi, WeightFunction tau)
      : system(std::move(system)), phi(std::move(phi)), tau(std::move(tau)) {}

  OdeSystem system;
  DenominatorFunction phi;
  WeightFunction tau;
};

/// One step of the scheme. If f(y) = 0 the state is returned unchanged
/// without consulting the weight. An infinite weight gives a zero increment.
State nsfd_step(const NsfdScheme& scheme, const State& y, double dt);

/// V(y^{k+1}) - V(y^k), evaluated by taking the step.
double delta_v_direct(const QuadraticLyapunov& v, const NsfdScheme& scheme, const State& y,
                      double dt);

/// The same variation in closed form, with h = phi / (1 + phi tau):
///
///   dV = h [ Vdot(y) + h sum_i alpha_i f_i(y)^2 ].
double delta_v_closed_form(const QuadraticLyapunov& v, const NsfdScheme& scheme, const State& y,
                           double dt);

/// Runs `steps` NSFD steps from y0. Step errors are rethrown as StepFailure.
Trajectory integrate(const NsfdScheme& scheme, const State& y0, double dt, std::size_t steps,
                     const IntegrationOptions& options = {});

}  // namespace nsfd
