#include "nsfd/reference_methods.hpp"

#include <cmath>
#include <vector>

#include "nsfd/errors.hpp"

namespace nsfd {

namespace {

void require_step(const OdeSystem& sys, const State& y, double dt) {
  sys.require_dimension(y);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("step size must be finite and positive");
}

std::vector<double> field(const OdeSystem& sys, std::span<const double> y) {
  std::vector<double> out(y.size());
  sys.evaluate(y, out);
  for (double v : out) {
    if (!std::isfinite(v)) throw NonFiniteValue("vector field is not finite");
  }
  return out;
}

State finished(std::vector<double> y) {
  State out = State::unchecked(std::move(y));
  if (!out.all_finite()) throw NonFiniteValue("iterate is not finite");
  return out;
}

}  // namespace

std::string_view method_name(OneStepMethod method) noexcept {
  switch (method) {
    case OneStepMethod::kEuler:
      return "euler";
    case OneStepMethod::kRk2Trapezoidal:
      return "rk2";
    case OneStepMethod::kRk4:
      return "rk4";
  }
  return "unknown";
}

OneStepMethod method_from_name(std::string_view name) {
  if (name == "euler") return OneStepMethod::kEuler;
  if (name == "rk2" || name == "rk2_trapezoidal") return OneStepMethod::kRk2Trapezoidal;
  if (name == "rk4") return OneStepMethod::kRk4;
  throw InvalidInput("unknown method '" + std::string(name) + "'");
}

State euler_step(const OdeSystem& sys, const State& y, double dt) {
  require_step(sys, y, dt);
  const auto f = field(sys, y.components());
  std::vector<double> next(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) next[i] = y[i] + dt * f[i];
  return finished(std::move(next));
}

State rk2_trapezoidal_step(const OdeSystem& sys, const State& y, double dt) {
  require_step(sys, y, dt);
  const std::size_t n = y.size();
  const auto k1 = field(sys, y.components());
  std::vector<double> stage(n);
  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + dt * k1[i];
  const auto k2 = field(sys, stage);
  std::vector<double> next(n);
  for (std::size_t i = 0; i < n; ++i) next[i] = y[i] + 0.5 * dt * (k1[i] + k2[i]);
  return finished(std::move(next));
}

State rk4_step(const OdeSystem& sys, const State& y, double dt) {
  require_step(sys, y, dt);
  const std::size_t n = y.size();
  const double half = 0.5 * dt;
  std::vector<double> stage(n);

  const auto k1 = field(sys, y.components());
  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + half * k1[i];
  const auto k2 = field(sys, stage);
  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + half * k2[i];
  const auto k3 = field(sys, stage);
  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + dt * k3[i];
  const auto k4 = field(sys, stage);

  std::vector<double> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    next[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return finished(std::move(next));
}

State step_with(OneStepMethod method, const OdeSystem& sys, const State& y, double dt) {
  switch (method) {
    case OneStepMethod::kEuler:
      return euler_step(sys, y, dt);
    case OneStepMethod::kRk2Trapezoidal:
      return rk2_trapezoidal_step(sys, y, dt);
    case OneStepMethod::kRk4:
      return rk4_step(sys, y, dt);
  }
  throw InvalidInput("unknown method");
}

Trajectory integrate_with(OneStepMethod method, const OdeSystem& sys, const State& y0, double dt,
                          std::size_t steps, const IntegrationOptions& options) {
  sys.require_dimension(y0);
  return drive([&](const State& y, double h) { return step_with(method, sys, y, h); }, y0, dt,
               steps, options, /*truncate_on_nonfinite=*/true);
}

}  // namespace nsfd
