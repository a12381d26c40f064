#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nsfd/lyapunov.hpp"
#include "nsfd/state.hpp"

namespace nsfd {

/// What an observer sees for iterate k. `v` is NaN when no monitor is set;
/// `dv` = V(y^{k+1}) - V(y^k) and is empty for the last iterate.
struct StepRecord {
  std::size_t k;
  double t;
  const State& y;
  double v;
  std::optional<double> dv;
};

using Observer = std::function<void(const StepRecord&)>;

struct IntegrationOptions {
  /// Lyapunov function reported to the observer.
  std::optional<QuadraticLyapunov> monitor;
  /// Called once per iterate, in order, k = 0 .. steps.
  Observer observer;
  /// When false only the final state is retained (streaming runs).
  bool keep_states = true;
};

struct Trajectory {
  /// y^0 .. y^steps when keep_states is set, otherwise empty.
  std::vector<State> states;
  State final_state;
  /// Index of the last iterate produced.
  std::size_t last_index = 0;
  /// Set when the run stopped early because an iterate became non-finite;
  /// holds the index of the step that failed.
  std::optional<std::size_t> diverged_at;
  std::string diagnostic;

  bool complete() const noexcept { return !diverged_at.has_value(); }
};

/// Signature shared by all one-step maps: y^{k+1} = step(y^k, dt).
using StepMap = std::function<State(const State&, double)>;

/// Applies `step` repeatedly. Errors thrown by `step` are rethrown as
/// StepFailure carrying the step index, except NonFiniteValue when
/// `truncate_on_nonfinite` is set: then the trajectory is cut at the last
/// finite iterate and `diverged_at` / `diagnostic` are filled in.
Trajectory drive(const StepMap& step, const State& y0, double dt, std::size_t steps,
                 const IntegrationOptions& options, bool truncate_on_nonfinite);

}  // namespace nsfd
