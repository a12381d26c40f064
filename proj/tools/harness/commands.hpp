#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "csv.hpp"
#include "nsfd/positivity.hpp"
#include "nsfd/properties.hpp"

namespace nsfd::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitNonFinite = 2,
  kExitPropertyViolation = 3,
};

/// What one integration looked like through the monitored Lyapunov function.
struct RunSummary {
  std::string method;
  double dt = 0.0;
  std::size_t steps = 0;
  std::size_t last_index = 0;
  double v_min = 0.0;
  double v_max = 0.0;
  /// V(y^{k+1}) < V(y^k) at every step (a run resting at the center counts
  /// as decreasing).
  bool monotone = true;
  std::optional<std::size_t> first_violation;
  State initial;
  State final_state;
  std::optional<std::size_t> diverged_at;
  std::string diagnostic;
  /// Non-empty when the scheme raised an error (the run is then incomplete).
  std::string error;
};

/// Integrates `method` ("nsfd", "euler", "rk2", "rk4") without storing the
/// trajectory; rows are streamed to `writer` when given.
RunSummary run_method(const std::string& method, const Problem& problem,
                      const ExperimentConfig& config, const State& y0, double dt,
                      std::size_t steps, CsvWriter* writer = nullptr);

std::string format_summary(const RunSummary& summary);

/// `run`: CSV to config.out, one summary line to `out`.
int cmd_run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// All four methods from the same initial state, run concurrently.
std::vector<RunSummary> compare_methods(const ExperimentConfig& config);
int cmd_compare(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

struct ConvergenceRow {
  std::string method;
  double dt = 0.0;
  double error = 0.0;
  bool is_reference = false;
};

struct ConvergenceResult {
  double final_time = 0.0;
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of log(error) against log(dt), per method.
  std::map<std::string, double> slopes;
};

ConvergenceResult measure_convergence(const ExperimentConfig& config);
int cmd_convergence(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

struct PropertySuiteResult {
  std::vector<PropertyReport> reports;
  /// Informational; a violation here is not a suite failure.
  std::vector<FaceViolation> face_violations;
  bool passed() const;
};

PropertySuiteResult run_property_suite(const ExperimentConfig& config);
int cmd_property_suite(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace nsfd::harness
