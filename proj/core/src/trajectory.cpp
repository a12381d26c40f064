#include "nsfd/trajectory.hpp"

#include <cmath>
#include <limits>

#include "nsfd/errors.hpp"

namespace nsfd {

Trajectory drive(const StepMap& step, const State& y0, double dt, std::size_t steps,
                 const IntegrationOptions& options, bool truncate_on_nonfinite) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("step size must be finite and positive");
  if (steps < 1) throw InvalidInput("step count must be at least 1");

  const auto value = [&](const State& y) {
    return options.monitor ? (*options.monitor)(y) : std::numeric_limits<double>::quiet_NaN();
  };

  Trajectory out;
  if (options.keep_states) out.states.reserve(steps + 1);

  State current = y0;
  double v_current = value(current);
  for (std::size_t k = 0; k < steps; ++k) {
    State next;
    try {
      next = step(current, dt);
      if (!next.all_finite()) throw NonFiniteValue("iterate became non-finite");
    } catch (const NonFiniteValue& e) {
      if (!truncate_on_nonfinite) throw StepFailure(k, e.what());
      if (options.observer) options.observer({k, static_cast<double>(k) * dt, current, v_current, {}});
      if (options.keep_states) out.states.push_back(std::move(current));
      out.final_state = options.keep_states ? out.states.back() : std::move(current);
      out.last_index = k;
      out.diverged_at = k;
      out.diagnostic = "trajectory became non-finite at step " + std::to_string(k) + " (t = " +
                       std::to_string(static_cast<double>(k + 1) * dt) + "): " + e.what();
      return out;
    } catch (const StepFailure&) {
      throw;
    } catch (const std::exception& e) {
      throw StepFailure(k, e.what());
    }
    const double v_next = value(next);
    if (options.observer) {
      options.observer({k, static_cast<double>(k) * dt, current, v_current, v_next - v_current});
    }
    if (options.keep_states) out.states.push_back(std::move(current));
    current = std::move(next);
    v_current = v_next;
  }
  if (options.observer) {
    options.observer({steps, static_cast<double>(steps) * dt, current, v_current, {}});
  }
  out.final_state = current;
  if (options.keep_states) out.states.push_back(std::move(current));
  out.last_index = steps;
  return out;
}

}  // namespace nsfd
