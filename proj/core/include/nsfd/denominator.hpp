#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace nsfd {

/// Step-size transform phi(dt) > 0 with phi(dt) = dt + O(dt^2).
class DenominatorFunction {
 public:
  DenominatorFunction(std::string name, std::function<double(double)> phi);

  /// phi(dt) = dt.
  static DenominatorFunction identity();
  /// phi(dt) = 1 - exp(-dt).
  static DenominatorFunction exponential();
  /// "identity" or "exponential" (alias "exp").
  static DenominatorFunction from_name(std::string_view name);

  const std::string& name() const noexcept { return name_; }

  /// Throws InvalidInput unless dt is finite and positive, and if the
  /// transform returns a non-positive value.
  double operator()(double dt) const;

 private:
  std::string name_;
  std::function<double(double)> phi_;
};

}  // namespace nsfd
