#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nsfd/lyapunov.hpp"
#include "nsfd/nsfd_scheme.hpp"
#include "nsfd/ode_system.hpp"

namespace nsfd::harness {

/// Configuration error; the CLI maps it to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemConfig {
  std::string id = "ghaffari";  // ghaffari | linear_decay | exchange | coupled_decay
  double A = 0.16;
  double B = 1.0;
  double C = 1.0;
  double D = 0.1;
  double alpha2 = 1.0;
  double lambda = 1.0;
};

enum class WeightRecipe { kLyapunov, kPositivity, kCombined, kConstant };

std::string_view recipe_name(WeightRecipe recipe) noexcept;
WeightRecipe recipe_from_name(std::string_view name);

/// One experiment. Field names match the JSON manifest keys.
struct ExperimentConfig {
  ProblemConfig problem;
  std::string method = "nsfd";  // nsfd | euler | rk2 | rk4
  double dt = 0.1;
  std::optional<std::size_t> steps;
  std::optional<double> final_time;
  std::optional<std::vector<double>> y0;
  std::optional<WeightRecipe> weight;  // nsfd only; defaults to lyapunov
  double margin = 0.001;
  std::string phi = "identity";
  std::string out;  // "" = no CSV, "-" = standard output
  std::uint64_t seed = 42;

  // property-suite
  std::size_t samples = 1000;
  // convergence
  std::vector<double> dts;
  double reference_dt = 1e-4;
  std::string reference = "rk4";  // rk4 | exact
  std::vector<std::string> methods = {"nsfd", "euler", "rk2", "rk4"};

  WeightRecipe weight_or_default() const { return weight.value_or(WeightRecipe::kLyapunov); }
};

/// Parses a JSON manifest. Unknown keys are rejected.
ExperimentConfig parse_config_json(std::string_view text);
ExperimentConfig load_config_file(const std::string& path);

/// Common checks: dt > 0, at most one of steps / final_time, steps >= 1,
/// margin >= 0, known identifiers.
void validate(const ExperimentConfig& config);
/// validate() plus: exactly one of steps / final_time, weight only with nsfd.
void validate_for_run(const ExperimentConfig& config);

/// steps, or ceil(final_time / dt) with a relative slack of 1e-9 so that
/// 1000 / 0.8 gives 1250.
std::size_t resolve_steps(const ExperimentConfig& config);

/// A built-in problem with its monitored Lyapunov function.
struct Problem {
  OdeSystem system;
  QuadraticLyapunov lyapunov;
  State default_y0;
  /// Exact solution y(t) from y(0), when known.
  std::function<State(const State&, double)> exact;
};

Problem make_problem(const ProblemConfig& config);
State initial_state(const ExperimentConfig& config, const Problem& problem);
NsfdScheme make_scheme(const ExperimentConfig& config, const Problem& problem);

}  // namespace nsfd::harness
