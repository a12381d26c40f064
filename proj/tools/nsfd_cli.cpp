// nsfd: run NSFD and reference integrators, compare them, measure
// convergence orders and exercise the randomized structure checks.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harness/commands.hpp"
#include "harness/config.hpp"

namespace {

using nsfd::harness::ExperimentConfig;

struct Flags {
  std::string config;
  std::optional<std::string> problem;
  std::optional<double> a, b, c, d, alpha2, lambda;
  std::optional<std::string> method;
  std::optional<double> dt;
  std::optional<std::size_t> steps;
  std::optional<double> final_time;
  std::vector<double> y0;
  std::optional<std::string> weight;
  std::optional<double> margin;
  std::optional<std::string> phi;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::vector<double> dts;
  std::optional<double> reference_dt;
  std::optional<std::string> reference;
  std::vector<std::string> methods;
};

void add_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "JSON experiment manifest")->check(CLI::ExistingFile);
  cmd->add_option("--problem", f.problem, "ghaffari | linear_decay | exchange | coupled_decay");
  cmd->add_option("--A", f.a, "test system parameter A");
  cmd->add_option("--B", f.b, "test system parameter B");
  cmd->add_option("--C", f.c, "test system parameter C");
  cmd->add_option("--D", f.d, "test system parameter D");
  cmd->add_option("--alpha2", f.alpha2, "Lyapunov coefficient alpha2 (alpha1 = C/B alpha2)");
  cmd->add_option("--lambda", f.lambda, "decay rate of linear_decay");
  cmd->add_option("--method", f.method, "nsfd | euler | rk2 | rk4");
  cmd->add_option("--dt", f.dt, "step size");
  cmd->add_option("--steps", f.steps, "number of steps");
  cmd->add_option("--final-time", f.final_time, "final time (steps = ceil(T / dt))");
  cmd->add_option("--y0", f.y0, "initial state, comma separated")->delimiter(',');
  cmd->add_option("--weight", f.weight, "lyapunov | positivity | combined | constant");
  cmd->add_option("--margin", f.margin, "margin g added to the weight bound (value of a constant weight)");
  cmd->add_option("--phi", f.phi, "denominator function: identity | exponential");
  cmd->add_option("--out", f.out, "output CSV path ('-' for standard output)");
  cmd->add_option("--seed", f.seed, "random seed");
}

ExperimentConfig resolve(const Flags& f) {
  ExperimentConfig c = f.config.empty() ? ExperimentConfig{} : nsfd::harness::load_config_file(f.config);
  if (f.problem) c.problem.id = *f.problem;
  if (f.a) c.problem.A = *f.a;
  if (f.b) c.problem.B = *f.b;
  if (f.c) c.problem.C = *f.c;
  if (f.d) c.problem.D = *f.d;
  if (f.alpha2) c.problem.alpha2 = *f.alpha2;
  if (f.lambda) c.problem.lambda = *f.lambda;
  if (f.method) c.method = *f.method;
  if (f.dt) c.dt = *f.dt;
  if (f.steps) {
    c.steps = *f.steps;
    if (!f.final_time) c.final_time.reset();
  }
  if (f.final_time) {
    c.final_time = *f.final_time;
    if (!f.steps) c.steps.reset();
  }
  if (!f.y0.empty()) c.y0 = f.y0;
  if (f.weight) c.weight = nsfd::harness::recipe_from_name(*f.weight);
  if (f.margin) c.margin = *f.margin;
  if (f.phi) c.phi = *f.phi;
  if (f.out) c.out = *f.out;
  if (f.seed) c.seed = *f.seed;
  if (f.samples) c.samples = *f.samples;
  if (!f.dts.empty()) c.dts = f.dts;
  if (f.reference_dt) c.reference_dt = *f.reference_dt;
  if (f.reference) c.reference = *f.reference;
  if (!f.methods.empty()) c.methods = f.methods;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyapunov- and positivity-preserving NSFD integrators"};
  app.require_subcommand(1);

  Flags flags;
  auto* run = app.add_subcommand("run", "integrate one method and write the trajectory as CSV");
  auto* compare = app.add_subcommand("compare", "run nsfd, euler, rk2 and rk4 side by side");
  auto* convergence = app.add_subcommand("convergence", "measure global convergence orders");
  auto* property = app.add_subcommand("property-suite", "randomized Lyapunov and positivity checks");
  for (auto* cmd : {run, compare, convergence, property}) add_flags(cmd, flags);

  convergence->add_option("--dts", flags.dts, "step sizes, comma separated")->delimiter(',');
  convergence->add_option("--reference-dt", flags.reference_dt, "RK4 reference step size");
  convergence->add_option("--reference", flags.reference, "rk4 | exact");
  convergence->add_option("--methods", flags.methods, "methods to measure")->delimiter(',');
  property->add_option("--samples", flags.samples, "random samples per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return nsfd::harness::kExitConfig;
  }

  ExperimentConfig config;
  try {
    config = resolve(flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return nsfd::harness::kExitConfig;
  }

  std::ios::sync_with_stdio(false);
  if (run->parsed()) return nsfd::harness::cmd_run(config, std::cout, std::cerr);
  if (compare->parsed()) return nsfd::harness::cmd_compare(config, std::cout, std::cerr);
  if (convergence->parsed()) return nsfd::harness::cmd_convergence(config, std::cout, std::cerr);
  return nsfd::harness::cmd_property_suite(config, std::cout, std::cerr);
}
