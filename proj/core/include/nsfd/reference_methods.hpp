#pragma once

#include <cstddef>
#include <string_view>

#include "nsfd/ode_system.hpp"
#include "nsfd/trajectory.hpp"

namespace nsfd {

enum class OneStepMethod { kEuler, kRk2Trapezoidal, kRk4 };

std::string_view method_name(OneStepMethod method) noexcept;
/// Accepts "euler", "rk2" / "rk2_trapezoidal", "rk4".
OneStepMethod method_from_name(std::string_view name);

/// y + dt f(y).
State euler_step(const OdeSystem& sys, const State& y, double dt);

/// Explicit trapezoidal rule (Heun):
///   k1 = f(y), k2 = f(y + dt k1), y + dt/2 (k1 + k2).
State rk2_trapezoidal_step(const OdeSystem& sys, const State& y, double dt);

/// Classical four-stage Runge-Kutta.
State rk4_step(const OdeSystem& sys, const State& y, double dt);

State step_with(OneStepMethod method, const OdeSystem& sys, const State& y, double dt);

/// Fixed-step integration. A non-finite iterate ends the run early; the
/// returned trajectory is truncated and carries a diagnostic.
Trajectory integrate_with(OneStepMethod method, const OdeSystem& sys, const State& y0, double dt,
                          std::size_t steps, const IntegrationOptions& options = {});

}  // namespace nsfd
