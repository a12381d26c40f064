#include "nsfd/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nsfd/errors.hpp"
#include "nsfd/sampling.hpp"

namespace nsfd {

namespace {

void require_nonnegative(const State& y) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0.0) {
      throw InvalidInput("positivity bound needs a nonnegative state, got " + to_string(y));
    }
  }
}

double component_bound(const State& y, const State& f, std::size_t i) {
  if (!std::isfinite(f[i])) throw NonFiniteValue("vector field is not finite at " + to_string(y));
  if (f[i] >= 0.0) return 0.0;
  if (y[i] == 0.0) {
    throw HypothesisViolation("system violates quasi-positivity at " + to_string(y) +
                              " (f_" + std::to_string(i + 1) + " < 0 on the face y_" +
                              std::to_string(i + 1) + " = 0)");
  }
  return -f[i] / y[i];
}

}  // namespace

double tau_star(const OdeSystem& sys, const State& y, std::size_t i) {
  sys.require_dimension(y);
  if (i >= y.size()) throw InvalidInput("component index out of range");
  require_nonnegative(y);
  return component_bound(y, sys(y), i);
}

double tau_positivity(const OdeSystem& sys, const State& y) {
  sys.require_dimension(y);
  require_nonnegative(y);
  const State f = sys(y);
  double bound = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) bound = std::max(bound, component_bound(y, f, i));
  return bound;
}

double tau_combined(const QuadraticLyapunov& v, const OdeSystem& sys, const State& y,
                    double margin) {
  if (!(margin >= 0.0) || !std::isfinite(margin)) {
    throw InvalidInput("weight margin must be finite and nonnegative");
  }
  return std::max(tau_lyapunov_bound(v, sys, y), tau_positivity(sys, y)) + margin;
}

std::vector<FaceViolation> check_quasi_positivity(const OdeSystem& sys, std::size_t samples,
                                                  const std::vector<double>& upper,
                                                  std::uint64_t seed) {
  const std::size_t n = sys.dimension();
  if (upper.size() != n) throw InvalidInput("box bounds must have one entry per component");
  for (double b : upper) {
    if (!(b > 0.0) || !std::isfinite(b)) throw InvalidInput("box bounds must be positive and finite");
  }
  std::mt19937_64 rng(seed);
  std::vector<FaceViolation> report;
  std::vector<double> point(n), out(n);
  for (std::size_t face = 0; face < n; ++face) {
    for (std::size_t s = 0; s < samples; ++s) {
      for (std::size_t j = 0; j < n; ++j) point[j] = j == face ? 0.0 : uniform(rng, 0.0, upper[j]);
      sys.evaluate(point, out);
      if (out[face] < -1e-12 || std::isnan(out[face])) {
        report.push_back({face, State::unchecked(point), out[face]});
      }
    }
  }
  return report;
}

}  // namespace nsfd
