#pragma once

#include <functional>
#include <string>

#include "nsfd/lyapunov.hpp"
#include "nsfd/ode_system.hpp"
#include "nsfd/state.hpp"

namespace nsfd {

/// Nonnegative scalar field tau(y) used in the NSFD denominator 1 + phi * tau.
///
/// The bound-based constructors return +infinity at the equilibrium, where
/// the bounds are 0/0. The stepper maps an infinite weight to a zero
/// increment.
class WeightFunction {
 public:
  WeightFunction(std::string name, std::function<double(const State&)> tau);

  static WeightFunction constant(double value);
  static WeightFunction custom(std::string name, std::function<double(const State&)> tau);
  /// tau_L + margin.
  static WeightFunction from_lyapunov_bound(QuadraticLyapunov v, OdeSystem sys, double margin);
  /// tau_P + margin.
  static WeightFunction from_positivity_bound(OdeSystem sys, double margin);
  /// max(tau_L, tau_P) + margin.
  static WeightFunction combined(QuadraticLyapunov v, OdeSystem sys, double margin);

  const std::string& name() const noexcept { return name_; }
  double operator()(const State& y) const { return tau_(y); }

  /// A copy whose value is shifted by `offset` >= 0.
  WeightFunction shifted(double offset) const;

 private:
  std::string name_;
  std::function<double(const State&)> tau_;
};

}  // namespace nsfd
