#include "nsfd/nsfd_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "nsfd/errors.hpp"

namespace nsfd {

namespace {

struct Increment {
  State field;
  // phi / (1 + phi tau); empty when the step is the identity map.
  std::optional<double> ratio;
  double phi = 0.0;
  double denominator = 1.0;
};

Increment prepare(const NsfdScheme& scheme, const State& y, double dt) {
  scheme.system.require_dimension(y);
  if (!y.all_finite()) throw InvalidInput("state is not finite");
  const double phi = scheme.phi(dt);

  Increment inc{scheme.system(y), std::nullopt, phi, 1.0};
  if (!inc.field.all_finite()) {
    throw NonFiniteValue("vector field is not finite at " + to_string(y));
  }
  const bool at_rest =
      std::all_of(inc.field.begin(), inc.field.end(), [](double v) { return v == 0.0; });
  if (at_rest) return inc;

  const double tau = scheme.tau(y);
  if (std::isnan(tau) || tau < 0.0) {
    throw HypothesisViolation("weight must be nonnegative, got tau = " + std::to_string(tau) +
                              " at " + to_string(y));
  }
  inc.denominator = 1.0 + phi * tau;
  if (std::isinf(inc.denominator)) return inc;
  inc.ratio = phi / inc.denominator;
  return inc;
}

}  // namespace

State nsfd_step(const NsfdScheme& scheme, const State& y, double dt) {
  const Increment inc = prepare(scheme, y, dt);
  if (!inc.ratio) return y;
  std::vector<double> next(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    next[i] = y[i] + (inc.phi * inc.field[i]) / inc.denominator;
  }
  State out = State::unchecked(std::move(next));
  if (!out.all_finite()) throw NonFiniteValue("NSFD iterate is not finite from " + to_string(y));
  return out;
}

double delta_v_direct(const QuadraticLyapunov& v, const NsfdScheme& scheme, const State& y,
                      double dt) {
  const State next = nsfd_step(scheme, y, dt);
  return v(next) - v(y);
}

double delta_v_closed_form(const QuadraticLyapunov& v, const NsfdScheme& scheme, const State& y,
                           double dt) {
  const Increment inc = prepare(scheme, y, dt);
  if (!inc.ratio) return 0.0;
  const double h = *inc.ratio;
  return h * (rate_from_field(v, y, inc.field) + h * weighted_square_sum(v, inc.field));
}

Trajectory integrate(const NsfdScheme& scheme, const State& y0, double dt, std::size_t steps,
                     const IntegrationOptions& options) {
  scheme.system.require_dimension(y0);
  return drive([&scheme](const State& y, double h) { return nsfd_step(scheme, y, h); }, y0, dt,
               steps, options, /*truncate_on_nonfinite=*/false);
}

}  // namespace nsfd
