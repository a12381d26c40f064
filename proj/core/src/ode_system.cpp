#include "nsfd/ode_system.hpp"

#include <vector>

#include "nsfd/errors.hpp"

namespace nsfd {

OdeSystem::OdeSystem(std::size_t dimension, VectorField rhs, State equilibrium, std::string name)
    : dimension_(dimension),
      rhs_(std::move(rhs)),
      equilibrium_(std::move(equilibrium)),
      name_(std::move(name)) {
  if (dimension_ == 0) throw InvalidInput("system dimension must be at least 1");
  if (!rhs_) throw InvalidInput("system right-hand side is empty");
  require_dimension(equilibrium_);
  const State residual = (*this)(equilibrium_);
  if (!(max_norm(residual) <= kEquilibriumResidual)) {
    throw InvalidInput("designated equilibrium is not a fixed point: |f(y*)| = " +
                       to_string(residual));
  }
}

void OdeSystem::require_dimension(const State& y) const {
  if (y.size() != dimension_) {
    throw InvalidInput("state has " + std::to_string(y.size()) + " components, system has " +
                       std::to_string(dimension_));
  }
}

void OdeSystem::evaluate(std::span<const double> y, std::span<double> out) const {
  rhs_(y, out);
}

State OdeSystem::operator()(const State& y) const {
  require_dimension(y);
  std::vector<double> out(dimension_, 0.0);
  rhs_(y.components(), out);
  return State::unchecked(std::move(out));
}

}  // namespace nsfd
