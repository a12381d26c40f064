#include "nsfd/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nsfd/errors.hpp"
#include "nsfd/sampling.hpp"

namespace nsfd {

State sample_state(std::mt19937_64& rng, const State& center, const SamplingRanges& ranges) {
  if (!(ranges.state_radius > ranges.min_distance) || !(ranges.min_distance >= 0.0)) {
    throw InvalidInput("sampling box must be wider than the excluded ball");
  }
  if (ranges.nonnegative && std::any_of(center.begin(), center.end(),
                                        [](double c) { return c < 0.0; })) {
    throw InvalidInput("nonnegative sampling needs a center in the orthant");
  }
  std::vector<double> y(center.size());
  for (;;) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double lo = ranges.nonnegative ? std::max(0.0, center[i] - ranges.state_radius)
                                           : center[i] - ranges.state_radius;
      y[i] = uniform(rng, lo, center[i] + ranges.state_radius);
    }
    State s(y);
    if (max_distance(s, center) >= ranges.min_distance) return s;
  }
}

PropertyReport check_lyapunov_decrease(const QuadraticLyapunov& v, const NsfdScheme& scheme,
                                       std::size_t samples, std::uint64_t seed,
                                       const SamplingRanges& ranges) {
  PropertyReport report{"lyapunov-decrease", 0, {}, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const State y = sample_state(rng, v.center(), ranges);
    const double dt = log_uniform(rng, ranges.dt_min, ranges.dt_max);
    ++report.checked;
    try {
      const double dv = delta_v_direct(v, scheme, y, dt);
      if (!(dv < 0.0)) report.violations.push_back({y, dt, dv, "dV >= 0"});
    } catch (const std::exception& e) {
      report.violations.push_back({y, dt, std::nan(""), e.what()});
    }
  }
  return report;
}

PropertyReport check_closed_form_identity(const QuadraticLyapunov& v, const NsfdScheme& scheme,
                                          std::size_t samples, std::uint64_t seed,
                                          double tolerance, const SamplingRanges& ranges) {
  PropertyReport report{"closed-form-identity", 0, {}, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const State y = sample_state(rng, v.center(), ranges);
    const double dt = log_uniform(rng, ranges.dt_min, ranges.dt_max);
    ++report.checked;
    try {
      const double direct = delta_v_direct(v, scheme, y, dt);
      const double closed = delta_v_closed_form(v, scheme, y, dt);
      const double gap = std::abs(closed - direct);
      if (!(gap <= tolerance * std::max(1.0, std::abs(direct)))) {
        report.violations.push_back({y, dt, gap, "closed form disagrees with direct difference"});
      }
    } catch (const std::exception& e) {
      report.violations.push_back({y, dt, std::nan(""), e.what()});
    }
  }
  return report;
}

PropertyReport check_positivity_invariance(const NsfdScheme& scheme, std::size_t samples,
                                           std::uint64_t seed, const PositivityRanges& ranges) {
  PropertyReport report{"positivity-invariance", 0, {}, {}};
  std::mt19937_64 rng(seed);
  const std::size_t n = scheme.system.dimension();
  std::vector<double> start(n);
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& c : start) c = uniform(rng, 0.0, ranges.upper);
    const double dt = log_uniform(rng, ranges.dt_min, ranges.dt_max);
    ++report.checked;
    State y(start);
    try {
      for (std::size_t k = 0; k < ranges.steps; ++k) {
        y = nsfd_step(scheme, y, dt);
        const double lowest = *std::min_element(y.begin(), y.end());
        if (lowest < -ranges.tolerance) {
          report.violations.push_back(
              {State(start), dt, lowest, "negative component at step " + std::to_string(k + 1)});
          break;
        }
        // The weight bounds are defined on the closed orthant only; rounding
        // residue inside the tolerance is mapped back onto it.
        if (lowest < 0.0) {
          std::vector<double> c = y.vector();
          for (double& x : c) x = std::max(x, 0.0);
          y = State(std::move(c));
        }
      }
    } catch (const HypothesisViolation& e) {
      const bool on_face = std::any_of(y.begin(), y.end(), [](double x) { return x == 0.0; });
      auto& bucket = on_face ? report.stopped : report.violations;
      bucket.push_back({State(start), dt, std::nan(""), e.what()});
    } catch (const std::exception& e) {
      report.violations.push_back({State(start), dt, std::nan(""), e.what()});
    }
  }
  return report;
}

}  // namespace nsfd
