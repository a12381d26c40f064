#include "nsfd/denominator.hpp"

#include <cmath>

#include "nsfd/errors.hpp"

namespace nsfd {

DenominatorFunction::DenominatorFunction(std::string name, std::function<double(double)> phi)
    : name_(std::move(name)), phi_(std::move(phi)) {
  if (!phi_) throw InvalidInput("denominator function is empty");
}

DenominatorFunction DenominatorFunction::identity() {
  return {"identity", [](double dt) { return dt; }};
}

DenominatorFunction DenominatorFunction::exponential() {
  // -expm1(-dt) keeps full relative precision for small dt.
  return {"exponential", [](double dt) { return -std::expm1(-dt); }};
}

DenominatorFunction DenominatorFunction::from_name(std::string_view name) {
  if (name == "identity") return identity();
  if (name == "exponential" || name == "exp") return exponential();
  throw InvalidInput("unknown denominator function '" + std::string(name) + "'");
}

double DenominatorFunction::operator()(double dt) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw InvalidInput("step size must be finite and positive");
  }
  const double value = phi_(dt);
  if (!(value > 0.0)) {
    throw InvalidInput("denominator function '" + name_ + "' is not positive at dt");
  }
  return value;
}

}  // namespace nsfd
