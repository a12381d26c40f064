#include "config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nsfd/errors.hpp"
#include "nsfd/problems.hpp"
#include "nsfd/reference_methods.hpp"

namespace nsfd::harness {

using nlohmann::json;

std::string_view recipe_name(WeightRecipe recipe) noexcept {
  switch (recipe) {
    case WeightRecipe::kLyapunov:
      return "lyapunov";
    case WeightRecipe::kPositivity:
      return "positivity";
    case WeightRecipe::kCombined:
      return "combined";
    case WeightRecipe::kConstant:
      return "constant";
  }
  return "unknown";
}

WeightRecipe recipe_from_name(std::string_view name) {
  if (name == "lyapunov") return WeightRecipe::kLyapunov;
  if (name == "positivity") return WeightRecipe::kPositivity;
  if (name == "combined") return WeightRecipe::kCombined;
  if (name == "constant") return WeightRecipe::kConstant;
  throw ConfigError("unknown weight recipe '" + std::string(name) + "'");
}

namespace {

template <typename T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field '") + key + "': " + e.what());
  }
}

ProblemConfig parse_problem(const json& j) {
  ProblemConfig p;
  if (j.is_string()) {
    p.id = j.get<std::string>();
    return p;
  }
  if (!j.is_object()) throw ConfigError("config field 'problem' must be a string or an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "id") p.id = get<std::string>(j, "id");
    else if (key == "A") p.A = get<double>(j, "A");
    else if (key == "B") p.B = get<double>(j, "B");
    else if (key == "C") p.C = get<double>(j, "C");
    else if (key == "D") p.D = get<double>(j, "D");
    else if (key == "alpha2") p.alpha2 = get<double>(j, "alpha2");
    else if (key == "lambda") p.lambda = get<double>(j, "lambda");
    else throw ConfigError("unknown problem field '" + key + "'");
  }
  return p;
}

}  // namespace

ExperimentConfig parse_config_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  ExperimentConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "problem") c.problem = parse_problem(value);
    else if (key == "method") c.method = get<std::string>(j, "method");
    else if (key == "dt") c.dt = get<double>(j, "dt");
    else if (key == "steps") {
      const auto s = get<long long>(j, "steps");
      if (s < 0) throw ConfigError("steps must be at least 1");
      c.steps = static_cast<std::size_t>(s);
    } else if (key == "final_time") c.final_time = get<double>(j, "final_time");
    else if (key == "y0") c.y0 = get<std::vector<double>>(j, "y0");
    else if (key == "weight") c.weight = recipe_from_name(get<std::string>(j, "weight"));
    else if (key == "margin") c.margin = get<double>(j, "margin");
    else if (key == "phi") c.phi = get<std::string>(j, "phi");
    else if (key == "out") c.out = get<std::string>(j, "out");
    else if (key == "seed") c.seed = get<std::uint64_t>(j, "seed");
    else if (key == "samples") {
      const auto s = get<long long>(j, "samples");
      if (s < 0) throw ConfigError("samples must be at least 1");
      c.samples = static_cast<std::size_t>(s);
    } else if (key == "dts") c.dts = get<std::vector<double>>(j, "dts");
    else if (key == "reference_dt") c.reference_dt = get<double>(j, "reference_dt");
    else if (key == "reference") c.reference = get<std::string>(j, "reference");
    else if (key == "methods") c.methods = get<std::vector<std::string>>(j, "methods");
    else if (key == "notes") continue;
    else throw ConfigError("unknown config field '" + key + "'");
  }
  return c;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_json(text.str());
}

void validate(const ExperimentConfig& c) {
  if (!(c.dt > 0.0) || !std::isfinite(c.dt)) throw ConfigError("dt must be finite and positive");
  if (c.steps && c.final_time) throw ConfigError("give either steps or final_time, not both");
  if (c.steps && *c.steps < 1) throw ConfigError("steps must be at least 1");
  if (c.final_time && (!(*c.final_time > 0.0) || !std::isfinite(*c.final_time))) {
    throw ConfigError("final_time must be finite and positive");
  }
  if (!(c.margin >= 0.0) || !std::isfinite(c.margin)) {
    throw ConfigError("margin must be finite and nonnegative");
  }
  if (c.method != "nsfd") {
    try {
      method_from_name(c.method);
    } catch (const InvalidInput&) {
      throw ConfigError("unknown method '" + c.method + "'");
    }
  }
  for (const auto& m : c.methods) {
    if (m != "nsfd" && m != "euler" && m != "rk2" && m != "rk4") {
      throw ConfigError("unknown method '" + m + "' in methods");
    }
  }
  if (c.phi != "identity" && c.phi != "exponential" && c.phi != "exp") {
    throw ConfigError("unknown denominator function '" + c.phi + "'");
  }
  if (c.reference != "rk4" && c.reference != "exact") {
    throw ConfigError("reference must be 'rk4' or 'exact'");
  }
}

void validate_for_run(const ExperimentConfig& c) {
  validate(c);
  if (!c.steps && !c.final_time) throw ConfigError("one of steps or final_time is required");
  if (c.weight && c.method != "nsfd") {
    throw ConfigError("a weight recipe is only accepted with method nsfd");
  }
}

std::size_t resolve_steps(const ExperimentConfig& c) {
  if (c.steps) return *c.steps;
  if (!c.final_time) throw ConfigError("one of steps or final_time is required");
  const double ratio = *c.final_time / c.dt;
  const double steps = std::ceil(ratio * (1.0 - 1e-9));
  if (!(steps >= 1.0) || steps > 1e15) throw ConfigError("final_time / dt gives no usable step count");
  return static_cast<std::size_t>(steps);
}

Problem make_problem(const ProblemConfig& p) {
  try {
    if (p.id == "ghaffari") {
      const problems::GhaffariSystem g(p.A, p.B, p.C, p.D);
      return {g.system(), problems::ghaffari_lyapunov(g, p.alpha2), State{0.5, 0.01}, {}};
    }
    if (p.id == "linear_decay") {
      const problems::LinearDecay1D decay(p.lambda);
      return {decay.system(), QuadraticLyapunov({1.0}, State{0.0}), State{1.0},
              [decay](const State& y0, double t) { return State{decay.exact(y0[0], t)}; }};
    }
    if (p.id == "exchange") {
      return {problems::exchange_system(), QuadraticLyapunov({1.0, 1.0}, State{0.0, 0.0}),
              State{1.0, 0.2}, {}};
    }
    if (p.id == "coupled_decay") {
      return {problems::coupled_decay_system(), QuadraticLyapunov({1.0, 1.0}, State{0.0, 0.0}),
              State{1.0, 0.2}, {}};
    }
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("problem parameters: ") + e.what());
  }
  throw ConfigError("unknown problem '" + p.id + "'");
}

State initial_state(const ExperimentConfig& c, const Problem& problem) {
  if (!c.y0) return problem.default_y0;
  if (c.y0->size() != problem.system.dimension()) {
    throw ConfigError("y0 has " + std::to_string(c.y0->size()) + " components, problem '" +
                      c.problem.id + "' has " + std::to_string(problem.system.dimension()));
  }
  try {
    return State(*c.y0);
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("y0: ") + e.what());
  }
}

NsfdScheme make_scheme(const ExperimentConfig& c, const Problem& problem) {
  const auto phi = DenominatorFunction::from_name(c.phi);
  switch (c.weight_or_default()) {
    case WeightRecipe::kLyapunov:
      return {problem.system, phi,
              WeightFunction::from_lyapunov_bound(problem.lyapunov, problem.system, c.margin)};
    case WeightRecipe::kPositivity:
      return {problem.system, phi, WeightFunction::from_positivity_bound(problem.system, c.margin)};
    case WeightRecipe::kCombined:
      return {problem.system, phi,
              WeightFunction::combined(problem.lyapunov, problem.system, c.margin)};
    case WeightRecipe::kConstant:
      return {problem.system, phi, WeightFunction::constant(c.margin)};
  }
  throw ConfigError("unknown weight recipe");
}

}  // namespace nsfd::harness
