#include "nsfd/weight.hpp"

#include <cmath>
#include <limits>

#include "nsfd/errors.hpp"
#include "nsfd/positivity.hpp"

namespace nsfd {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void require_margin(double margin) {
  if (!(margin >= 0.0) || !std::isfinite(margin)) {
    throw InvalidInput("weight margin must be finite and nonnegative");
  }
}

}  // namespace

WeightFunction::WeightFunction(std::string name, std::function<double(const State&)> tau)
    : name_(std::move(name)), tau_(std::move(tau)) {
  if (!tau_) throw InvalidInput("weight function is empty");
}

WeightFunction WeightFunction::constant(double value) {
  require_margin(value);
  return {"constant", [value](const State&) { return value; }};
}

WeightFunction WeightFunction::custom(std::string name, std::function<double(const State&)> tau) {
  return {std::move(name), std::move(tau)};
}

WeightFunction WeightFunction::from_lyapunov_bound(QuadraticLyapunov v, OdeSystem sys,
                                                   double margin) {
  require_margin(margin);
  return {"lyapunov", [v = std::move(v), sys = std::move(sys), margin](const State& y) {
            if (at_equilibrium(y, v.center())) return kInfinity;
            return tau_lyapunov_bound(v, sys, y) + margin;
          }};
}

WeightFunction WeightFunction::from_positivity_bound(OdeSystem sys, double margin) {
  require_margin(margin);
  return {"positivity", [sys = std::move(sys), margin](const State& y) {
            return tau_positivity(sys, y) + margin;
          }};
}

WeightFunction WeightFunction::combined(QuadraticLyapunov v, OdeSystem sys, double margin) {
  require_margin(margin);
  return {"combined", [v = std::move(v), sys = std::move(sys), margin](const State& y) {
            if (at_equilibrium(y, v.center())) return kInfinity;
            return tau_combined(v, sys, y, margin);
          }};
}

WeightFunction WeightFunction::shifted(double offset) const {
  require_margin(offset);
  return {name_ + "+" + std::to_string(offset),
          [inner = tau_, offset](const State& y) { return inner(y) + offset; }};
}

}  // namespace nsfd
