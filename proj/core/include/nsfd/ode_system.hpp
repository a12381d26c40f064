#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "nsfd/state.hpp"

namespace nsfd {

/// Right-hand side f of an autonomous system y' = f(y). Writes f(y) into `out`,
/// which has the same length as `y`.
using VectorField = std::function<void(std::span<const double> y, std::span<double> out)>;

/// Autonomous ODE system with a designated equilibrium y* (f(y*) = 0).
///
/// Construction evaluates the field at the equilibrium and rejects the system
/// if the residual exceeds kEquilibriumResidual in the max-norm.
class OdeSystem {
 public:
  static constexpr double kEquilibriumResidual = 1e-12;

  OdeSystem(std::size_t dimension, VectorField rhs, State equilibrium, std::string name = {});

  std::size_t dimension() const noexcept { return dimension_; }
  const State& equilibrium() const noexcept { return equilibrium_; }
  const std::string& name() const noexcept { return name_; }

  /// f(y). The result is not checked for finiteness; callers decide how a
  /// non-finite field value is handled.
  State operator()(const State& y) const;
  void evaluate(std::span<const double> y, std::span<double> out) const;

  void require_dimension(const State& y) const;

 private:
  std::size_t dimension_;
  VectorField rhs_;
  State equilibrium_;
  std::string name_;
};

}  // namespace nsfd
