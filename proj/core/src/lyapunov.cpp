#include "nsfd/lyapunov.hpp"

#include <cmath>

#include "nsfd/errors.hpp"

namespace nsfd {

namespace {

void require_same_dimension(const QuadraticLyapunov& v, const State& y) {
  if (y.size() != v.dimension()) {
    throw InvalidInput("state has " + std::to_string(y.size()) +
                       " components, Lyapunov function has " + std::to_string(v.dimension()));
  }
}

void require_matching_system(const QuadraticLyapunov& v, const OdeSystem& sys, const State& y) {
  require_same_dimension(v, y);
  sys.require_dimension(y);
  if (!at_equilibrium(v.center(), sys.equilibrium())) {
    throw InvalidInput("Lyapunov center " + to_string(v.center()) +
                       " differs from system equilibrium " + to_string(sys.equilibrium()));
  }
}

}  // namespace

QuadraticLyapunov::QuadraticLyapunov(std::vector<double> alphas, State center)
    : alphas_(std::move(alphas)), center_(std::move(center)) {
  if (alphas_.empty()) throw InvalidInput("Lyapunov function needs at least one coefficient");
  if (alphas_.size() != center_.size()) {
    throw InvalidInput("Lyapunov coefficients and center differ in length");
  }
  for (double a : alphas_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw InvalidInput("Lyapunov coefficients must be finite and strictly positive");
    }
  }
}

double QuadraticLyapunov::operator()(const State& y) const {
  require_same_dimension(*this, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    const double d = y[i] - center_[i];
    sum += alphas_[i] * d * d;
  }
  return sum;
}

bool at_equilibrium(const State& y, const State& center) {
  return max_distance(y, center) <= 1e-12 * (1.0 + max_norm(center));
}

double lyapunov_value(const QuadraticLyapunov& v, const State& y) { return v(y); }

double weighted_square_sum(const QuadraticLyapunov& v, const State& f) {
  require_same_dimension(v, f);
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += v.alphas()[i] * f[i] * f[i];
  return sum;
}

double rate_from_field(const QuadraticLyapunov& v, const State& y, const State& f) {
  require_same_dimension(v, y);
  require_same_dimension(v, f);
  double sum = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    sum += v.alphas()[i] * (y[i] - v.center()[i]) * f[i];
  }
  return 2.0 * sum;
}

double lyapunov_rate(const QuadraticLyapunov& v, const OdeSystem& sys, const State& y) {
  require_matching_system(v, sys, y);
  return rate_from_field(v, y, sys(y));
}

double tau_lyapunov_bound(const QuadraticLyapunov& v, const OdeSystem& sys, const State& y) {
  require_matching_system(v, sys, y);
  if (at_equilibrium(y, v.center())) {
    throw HypothesisViolation("bound undefined at equilibrium");
  }
  const State f = sys(y);
  if (!f.all_finite()) throw NonFiniteValue("vector field is not finite at " + to_string(y));
  const double rate = rate_from_field(v, y, f);
  if (!(rate < 0.0)) {
    throw HypothesisViolation(
        "Lyapunov rate not strictly negative at " + to_string(y) +
        ": V is not a valid strict Lyapunov function here");
  }
  return -weighted_square_sum(v, f) / rate;
}

}  // namespace nsfd
