#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <memory>

#include "nsfd/errors.hpp"
#include "nsfd/reference_methods.hpp"

namespace nsfd::harness {

namespace {

const std::vector<std::string> kAllMethods = {"nsfd", "euler", "rk2", "rk4"};

Trajectory integrate_named(const std::string& method, const Problem& problem,
                           const ExperimentConfig& config, const State& y0, double dt,
                           std::size_t steps, const IntegrationOptions& options) {
  if (method == "nsfd") return integrate(make_scheme(config, problem), y0, dt, steps, options);
  return integrate_with(method_from_name(method), problem.system, y0, dt, steps, options);
}

std::unique_ptr<std::ostream> open_output(const std::string& path, std::ostream& fallback) {
  if (path.empty()) return nullptr;
  if (path == "-") return std::make_unique<std::ostream>(fallback.rdbuf());
  auto file = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
  if (!*file) throw ConfigError("cannot open output file '" + path + "'");
  return file;
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

RunSummary run_method(const std::string& method, const Problem& problem,
                      const ExperimentConfig& config, const State& y0, double dt,
                      std::size_t steps, CsvWriter* writer) {
  RunSummary s;
  s.method = method;
  s.dt = dt;
  s.steps = steps;
  s.initial = y0;
  s.final_state = y0;
  s.v_min = std::numeric_limits<double>::infinity();
  s.v_max = -std::numeric_limits<double>::infinity();

  IntegrationOptions options;
  options.monitor = problem.lyapunov;
  options.keep_states = false;
  options.observer = [&](const StepRecord& r) {
    s.v_min = std::min(s.v_min, r.v);
    s.v_max = std::max(s.v_max, r.v);
    s.last_index = r.k;
    if (r.dv) {
      const bool decreasing = *r.dv < 0.0 || (r.v == 0.0 && *r.dv == 0.0);
      if (!decreasing && s.monotone) {
        s.monotone = false;
        s.first_violation = r.k;
      }
    }
    if (writer) writer->write(r);
  };

  try {
    const Trajectory traj = integrate_named(method, problem, config, y0, dt, steps, options);
    s.final_state = traj.final_state;
    s.last_index = traj.last_index;
    s.diverged_at = traj.diverged_at;
    s.diagnostic = traj.diagnostic;
  } catch (const std::exception& e) {
    s.error = e.what();
  }
  return s;
}

std::string format_summary(const RunSummary& s) {
  std::string line = "method=" + s.method + " dt=" + format_double(s.dt) +
                     " steps=" + std::to_string(s.steps) + " last_k=" + std::to_string(s.last_index) +
                     " V_min=" + format_double(s.v_min) + " V_max=" + format_double(s.v_max) +
                     " V_monotone_decreasing=" + flag(s.monotone);
  if (s.first_violation) line += " first_violation_k=" + std::to_string(*s.first_violation);
  line += " final=" + to_string(s.final_state);
  if (!s.error.empty()) {
    line += " status=error (" + s.error + ")";
  } else if (s.diverged_at) {
    line += " status=diverged truncated_at_k=" + std::to_string(*s.diverged_at);
  } else {
    line += " status=ok";
  }
  return line;
}

int cmd_run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_for_run(config);
    const Problem problem = make_problem(config.problem);
    const State y0 = initial_state(config, problem);
    const std::size_t steps = resolve_steps(config);
    if (config.method == "nsfd") make_scheme(config, problem);

    auto csv = open_output(config.out, out);
    std::optional<CsvWriter> writer;
    if (csv) writer.emplace(*csv, problem.system.dimension());
    const RunSummary s =
        run_method(config.method, problem, config, y0, config.dt, steps, writer ? &*writer : nullptr);
    if (csv) csv->flush();

    (config.out == "-" ? err : out) << format_summary(s) << '\n';
    if (!s.error.empty()) {
      err << "error: " << s.error << '\n';
      return kExitConfig;
    }
    if (s.diverged_at) {
      err << s.diagnostic << '\n';
      return kExitNonFinite;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

std::vector<RunSummary> compare_methods(const ExperimentConfig& config) {
  validate(config);
  if (!config.steps && !config.final_time) throw ConfigError("one of steps or final_time is required");
  const Problem problem = make_problem(config.problem);
  const State y0 = initial_state(config, problem);
  const std::size_t steps = resolve_steps(config);

  std::vector<std::future<RunSummary>> jobs;
  for (const auto& method : kAllMethods) {
    jobs.push_back(std::async(std::launch::async, [&, method] {
      return run_method(method, problem, config, y0, config.dt, steps);
    }));
  }
  std::vector<RunSummary> rows;
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

int cmd_compare(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto rows = compare_methods(config);
    char line[256];
    std::snprintf(line, sizeof line, "%-6s %-9s %-10s %-16s %-24s\n", "method", "status",
                  "monotone", "first_violation", "final_max_norm");
    out << line;
    for (const auto& r : rows) {
      const std::string status = !r.error.empty() ? "error" : r.diverged_at ? "diverged" : "ok";
      const std::string violation = r.first_violation ? std::to_string(*r.first_violation) : "-";
      std::snprintf(line, sizeof line, "%-6s %-9s %-10s %-16s %-24s\n", r.method.c_str(),
                    status.c_str(), flag(r.monotone).c_str(), violation.c_str(),
                    format_double(max_norm(r.final_state)).c_str());
      out << line;
      if (!r.error.empty()) err << r.method << ": " << r.error << '\n';
      if (r.diverged_at) err << r.method << ": " << r.diagnostic << '\n';
    }
    if (auto csv = open_output(config.out, out)) {
      *csv << "method,status,monotone,first_violation,final_max_norm,last_k\n";
      for (const auto& r : rows) {
        *csv << r.method << ','
             << (!r.error.empty() ? "error" : r.diverged_at ? "diverged" : "ok") << ','
             << flag(r.monotone) << ','
             << (r.first_violation ? std::to_string(*r.first_violation) : "") << ','
             << format_double(max_norm(r.final_state)) << ',' << r.last_index << '\n';
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw InvalidInput("slope needs at least two points");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw InvalidInput("slope needs at least two distinct step sizes");
  return sxy / sxx;
}

namespace {

std::size_t exact_ratio(double numerator, double denominator, const std::string& what) {
  const double ratio = numerator / denominator;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded) {
    throw ConfigError(what + " (" + format_double(numerator) + " / " + format_double(denominator) +
                      " is not a positive integer)");
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace

ConvergenceResult measure_convergence(const ExperimentConfig& config) {
  validate(config);
  const std::vector<double> dts = config.dts.empty() ? std::vector<double>{0.02, 0.01, 0.005}
                                                     : config.dts;
  if (dts.size() < 2) throw ConfigError("convergence needs at least two step sizes");
  if (!(config.reference_dt > 0.0)) throw ConfigError("reference_dt must be positive");
  for (double dt : dts) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("step sizes must be positive");
  }

  const Problem problem = make_problem(config.problem);
  const State y0 = initial_state(config, problem);
  ConvergenceResult result;
  result.final_time = config.final_time.value_or(10.0);
  const double T = result.final_time;

  for (double dt : dts) {
    exact_ratio(dt, config.reference_dt, "step size is not a multiple of the reference step");
    exact_ratio(T, dt, "final time is not a multiple of the step size");
  }

  State reference;
  if (config.reference == "exact") {
    if (!problem.exact) throw ConfigError("problem '" + config.problem.id + "' has no exact solution");
    reference = problem.exact(y0, T);
  } else {
    const std::size_t ref_steps = exact_ratio(T, config.reference_dt,
                                              "final time is not a multiple of the reference step");
    IntegrationOptions quiet;
    quiet.keep_states = false;
    const Trajectory ref = integrate_with(OneStepMethod::kRk4, problem.system, y0,
                                          config.reference_dt, ref_steps, quiet);
    if (!ref.complete()) throw ConfigError("reference solution diverged: " + ref.diagnostic);
    reference = ref.final_state;
  }

  std::vector<std::future<std::vector<ConvergenceRow>>> jobs;
  for (const auto& method : config.methods) {
    jobs.push_back(std::async(std::launch::async, [&, method] {
      std::vector<ConvergenceRow> rows;
      for (double dt : dts) {
        ConvergenceRow row{method, dt, 0.0, false};
        if (method == "rk4" && config.reference == "rk4" &&
            exact_ratio(dt, config.reference_dt, "") == 1) {
          row.is_reference = true;
          rows.push_back(row);
          continue;
        }
        IntegrationOptions quiet;
        quiet.keep_states = false;
        const std::size_t steps = exact_ratio(T, dt, "");
        const Trajectory traj = integrate_named(method, problem, config, y0, dt, steps, quiet);
        row.error = traj.complete() ? max_distance(traj.final_state, reference)
                                    : std::numeric_limits<double>::infinity();
        rows.push_back(row);
      }
      return rows;
    }));
  }
  for (std::size_t m = 0; m < jobs.size(); ++m) {
    const auto rows = jobs[m].get();
    std::vector<double> x, y;
    for (const auto& row : rows) {
      result.rows.push_back(row);
      if (!row.is_reference && row.error > 0.0 && std::isfinite(row.error)) {
        x.push_back(row.dt);
        y.push_back(row.error);
      }
    }
    if (x.size() >= 2) result.slopes[config.methods[m]] = log_log_slope(x, y);
  }
  return result;
}

int cmd_convergence(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto result = measure_convergence(config);
    out << "final_time=" << format_double(result.final_time) << " reference=" << config.reference
        << " reference_dt=" << format_double(config.reference_dt) << '\n';
    out << "method,dt,error\n";
    for (const auto& row : result.rows) {
      out << row.method << ',' << format_double(row.dt) << ','
          << (row.is_reference ? std::string("reference") : format_double(row.error)) << '\n';
    }
    for (const auto& method : config.methods) {
      const auto it = result.slopes.find(method);
      out << "slope " << method << ' '
          << (it == result.slopes.end() ? std::string("n/a") : format_double(it->second)) << '\n';
    }
    if (auto csv = open_output(config.out, out)) {
      *csv << "method,dt,error\n";
      for (const auto& row : result.rows) {
        *csv << row.method << ',' << format_double(row.dt) << ','
             << (row.is_reference ? std::string("reference") : format_double(row.error)) << '\n';
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

bool PropertySuiteResult::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

PropertySuiteResult run_property_suite(const ExperimentConfig& config) {
  validate(config);
  if (config.samples < 1) throw ConfigError("samples must be at least 1");
  const Problem problem = make_problem(config.problem);
  const NsfdScheme scheme = make_scheme(config, problem);

  const auto recipe = config.weight_or_default();
  const bool orthant = recipe == WeightRecipe::kPositivity || recipe == WeightRecipe::kCombined;
  SamplingRanges ranges;
  ranges.nonnegative = orthant;

  PropertySuiteResult result;
  result.reports.push_back(
      check_lyapunov_decrease(problem.lyapunov, scheme, config.samples, config.seed, ranges));
  result.reports.push_back(check_closed_form_identity(problem.lyapunov, scheme, config.samples,
                                                      config.seed, 1e-10, ranges));
  if (orthant) {
    result.reports.push_back(check_positivity_invariance(scheme, config.samples, config.seed));
  }
  result.face_violations = check_quasi_positivity(
      problem.system, config.samples, std::vector<double>(problem.system.dimension(), 10.0),
      config.seed);
  return result;
}

int cmd_property_suite(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  PropertySuiteResult result;
  try {
    result = run_property_suite(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  out << "problem=" << config.problem.id << " weight=" << recipe_name(config.weight_or_default())
      << " margin=" << format_double(config.margin) << " phi=" << config.phi
      << " samples=" << config.samples << " seed=" << config.seed << '\n';
  for (const auto& report : result.reports) {
    out << (report.passed() ? "PASS " : "FAIL ") << report.name << " checked=" << report.checked
        << " violations=" << report.violations.size();
    if (!report.stopped.empty()) out << " stopped_on_face=" << report.stopped.size();
    out << '\n';
    if (!report.passed()) {
      const auto& c = report.violations.front();
      out << "  counterexample y=" << to_string(c.y) << " dt=" << format_double(c.dt)
          << " value=" << format_double(c.value) << " (" << c.detail << ")\n";
    }
  }
  out << "info quasi-positivity face samples: " << result.face_violations.size()
      << " violations";
  if (!result.face_violations.empty()) {
    const auto& v = result.face_violations.front();
    out << " (first: face y" << v.face + 1 << " = 0 at " << to_string(v.point)
        << ", f = " << format_double(v.rate) << ")";
  }
  out << '\n';
  return result.passed() ? kExitOk : kExitPropertyViolation;
}

}  // namespace nsfd::harness
