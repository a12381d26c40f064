#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "harness/commands.hpp"
#include "harness/config.hpp"
#include "harness/csv.hpp"
#include "nsfd/errors.hpp"
#include "nsfd/sampling.hpp"

namespace nsfd::harness {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "nsfd_harness_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig study(const std::string& method, double dt) {
  ExperimentConfig c;
  c.method = method;
  c.dt = dt;
  c.final_time = 1000.0;
  return c;
}

TEST(Config, ParsesManifest) {
  const auto c = parse_config_json(R"({
    "problem": {"id": "ghaffari", "A": 0.16, "B": 1, "C": 1, "D": 0.1, "alpha2": 1},
    "method": "nsfd", "dt": 0.8, "final_time": 1000, "y0": [0.5, 0.01],
    "weight": "combined", "margin": 0.002, "phi": "exponential", "out": "x.csv", "seed": 9,
    "notes": "anything"
  })");
  EXPECT_EQ(c.problem.id, "ghaffari");
  EXPECT_EQ(c.dt, 0.8);
  EXPECT_EQ(*c.final_time, 1000.0);
  EXPECT_EQ(*c.weight, WeightRecipe::kCombined);
  EXPECT_EQ(c.margin, 0.002);
  EXPECT_EQ(c.phi, "exponential");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(resolve_steps(c), 1250u);
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(parse_config_json("{"), ConfigError);
  EXPECT_THROW(parse_config_json(R"({"dtt": 1})"), ConfigError);
  EXPECT_THROW(parse_config_json(R"({"dt": "big"})"), ConfigError);
  EXPECT_THROW(parse_config_json(R"({"weight": "heavy"})"), ConfigError);
  EXPECT_THROW(parse_config_json(R"({"problem": {"id": "x", "E": 1}})"), ConfigError);

  auto c = study("nsfd", 0.8);
  c.steps = 10;
  EXPECT_THROW(validate_for_run(c), ConfigError);  // both steps and final_time
  c.final_time.reset();
  c.steps = 0;
  EXPECT_THROW(validate_for_run(c), ConfigError);
  c.steps = 10;
  c.dt = -1;
  EXPECT_THROW(validate_for_run(c), ConfigError);
  c.dt = 0.1;
  c.method = "euler";
  c.weight = WeightRecipe::kLyapunov;
  EXPECT_THROW(validate_for_run(c), ConfigError);
  c.weight.reset();
  EXPECT_NO_THROW(validate_for_run(c));
  c.steps.reset();
  EXPECT_THROW(validate_for_run(c), ConfigError);

  ExperimentConfig bad_problem;
  bad_problem.problem.id = "lorenz";
  EXPECT_THROW(make_problem(bad_problem.problem), ConfigError);
  bad_problem.problem.id = "ghaffari";
  bad_problem.problem.A = 0.0;
  EXPECT_THROW(make_problem(bad_problem.problem), ConfigError);
}

TEST(Config, StepsFromFinalTime) {
  ExperimentConfig c;
  c.dt = 0.001;
  c.final_time = 1000.0;
  EXPECT_EQ(resolve_steps(c), 1'000'000u);
  c.dt = 0.3;
  c.final_time = 1.0;
  EXPECT_EQ(resolve_steps(c), 4u);
}

TEST(Csv, HeaderAndFormat) {
  EXPECT_EQ(csv_header(2), "k,t,y1,y2,V,dV");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  std::ostringstream out;
  write_csv(out, RunRecord{1, {RunRow{0, 0.0, {2.0}, 4.0, -3.0}, RunRow{1, 0.5, {1.0}, 1.0, {}}}});
  EXPECT_EQ(out.str(), "k,t,y1,V,dV\n0,0,2,4,-3\n1,0.5,1,1,\n");
}

TEST(Csv, RoundTripPreservesEveryField) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    RunRecord record;
    record.dimension = 1 + static_cast<std::size_t>(rng() % 4);
    const std::size_t rows = 1 + rng() % 50;
    for (std::size_t k = 0; k < rows; ++k) {
      RunRow row;
      row.k = k;
      row.t = static_cast<double>(k) * log_uniform(rng, 1e-6, 1e3);
      for (std::size_t i = 0; i < record.dimension; ++i) {
        row.y.push_back(uniform(rng, -1, 1) * log_uniform(rng, 1e-300, 1e300));
      }
      row.v = log_uniform(rng, 1e-200, 1e200);
      if (k + 1 < rows) row.dv = -log_uniform(rng, 1e-200, 1e200);
      record.rows.push_back(row);
    }
    std::stringstream buffer;
    write_csv(buffer, record);
    const RunRecord back = read_csv(buffer);
    ASSERT_EQ(back.dimension, record.dimension);
    ASSERT_EQ(back.rows.size(), record.rows.size());
    for (std::size_t k = 0; k < rows; ++k) EXPECT_EQ(back.rows[k], record.rows[k]);
  }
}

TEST(Csv, RejectsMalformed) {
  std::istringstream bad_header("k,t,x1,V,dV\n");
  EXPECT_THROW(read_csv(bad_header), std::runtime_error);
  std::istringstream bad_row("k,t,y1,V,dV\n0,0,abc,1,\n");
  EXPECT_THROW(read_csv(bad_row), std::runtime_error);
  std::istringstream short_row("k,t,y1,V,dV\n0,0,1\n");
  EXPECT_THROW(read_csv(short_row), std::runtime_error);
}

TEST(CmdRun, NsfdIsMonotoneAndEulerIsNot) {
  std::ostringstream out, err;
  auto c = study("nsfd", 1.0);
  EXPECT_EQ(cmd_run(c, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("V_monotone_decreasing=true"), std::string::npos) << out.str();

  out.str("");
  c = study("euler", 0.8);
  EXPECT_EQ(cmd_run(c, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("V_monotone_decreasing=false"), std::string::npos) << out.str();
}

TEST(CmdRun, WritesCsvMatchingTrajectory) {
  const auto path = scratch("run.csv");
  auto c = study("nsfd", 0.8);
  c.final_time.reset();
  c.steps = 50;
  c.out = path.string();
  std::ostringstream out, err;
  ASSERT_EQ(cmd_run(c, out, err), kExitOk) << err.str();

  std::ifstream in(path);
  const auto record = read_csv(in);
  ASSERT_EQ(record.rows.size(), 51u);
  EXPECT_FALSE(record.rows.back().dv.has_value());
  const auto problem = make_problem(c.problem);
  const auto traj = integrate(make_scheme(c, problem), problem.default_y0, 0.8, 50);
  for (std::size_t k = 0; k <= 50; ++k) {
    EXPECT_EQ(record.rows[k].y, traj.states[k].vector());
    EXPECT_EQ(record.rows[k].v, problem.lyapunov(traj.states[k]));
    EXPECT_EQ(record.rows[k].t, 0.8 * static_cast<double>(k));
  }
}

TEST(CmdRun, DeterministicBytes) {
  const auto a = scratch("det_a.csv"), b = scratch("det_b.csv");
  for (const auto& path : {a, b}) {
    auto c = study("rk2", 0.8);
    c.out = path.string();
    std::ostringstream out, err;
    ASSERT_EQ(cmd_run(c, out, err), kExitOk);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(CmdRun, ExitCodes) {
  std::ostringstream out, err;
  auto c = study("nsfd", 0.8);
  c.final_time.reset();
  c.steps = 0;
  EXPECT_EQ(cmd_run(c, out, err), kExitConfig);

  c = study("euler", 50.0);
  c.final_time.reset();
  c.steps = 100;
  c.y0 = std::vector<double>{5.0, 5.0};
  EXPECT_EQ(cmd_run(c, out, err), kExitNonFinite);
  EXPECT_NE(out.str().find("status=diverged"), std::string::npos);

  // The positivity bound cannot be formed where the test system leaves the orthant.
  c = study("nsfd", 0.1);
  c.weight = WeightRecipe::kPositivity;
  c.y0 = std::vector<double>{0.5, 0.0};
  EXPECT_EQ(cmd_run(c, out, err), kExitConfig);
}

TEST(CmdCompare, StudyContrast) {
  auto c = study("nsfd", 0.8);
  const auto rows = compare_methods(c);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.initial, (State{0.5, 0.01}));
    if (r.method == "nsfd") EXPECT_TRUE(r.monotone);
    if (r.method == "euler" || r.method == "rk2") EXPECT_FALSE(r.monotone) << r.method;
  }

  std::ostringstream out, err;
  EXPECT_EQ(cmd_compare(c, out, err), kExitOk);
  EXPECT_NE(out.str().find("nsfd"), std::string::npos);
}

TEST(CmdCompare, TinyStepAndEquilibrium) {
  auto c = study("nsfd", 1e-4);
  c.final_time = 1.0;
  for (const auto& r : compare_methods(c)) {
    EXPECT_TRUE(r.monotone) << r.method;
    EXPECT_LT(max_norm(r.final_state), 0.5) << r.method;
  }
  c.y0 = std::vector<double>{0.0, 0.0};
  for (const auto& r : compare_methods(c)) {
    EXPECT_EQ(r.final_state, (State{0.0, 0.0})) << r.method;
    EXPECT_EQ(r.v_max, 0.0);
  }
}

TEST(Convergence, LinearDecayAgainstExact) {
  ExperimentConfig c;
  c.problem.id = "linear_decay";
  c.final_time = 1.0;
  c.dts = {0.1, 0.05, 0.025};
  c.reference = "exact";
  const auto result = measure_convergence(c);
  EXPECT_NEAR(result.slopes.at("euler"), 1.0, 0.2);
  EXPECT_NEAR(result.slopes.at("rk2"), 2.0, 0.2);
  EXPECT_NEAR(result.slopes.at("rk4"), 4.0, 0.3);
}

// The weight on the test system is tau_L ~ 10-25, so order one shows once
// phi * tau << 1.
TEST(Convergence, NsfdOrderOneInAsymptoticRange) {
  ExperimentConfig c;
  c.final_time = 10.0;
  c.dts = {0.002, 0.001, 0.0005};
  c.methods = {"nsfd"};
  const auto result = measure_convergence(c);
  EXPECT_GE(result.slopes.at("nsfd"), 0.8);
  EXPECT_LE(result.slopes.at("nsfd"), 1.2);
}

TEST(Convergence, ReferenceRowAndValidation) {
  ExperimentConfig c;
  c.problem.id = "linear_decay";
  c.final_time = 0.01;
  c.dts = {1e-4, 2e-4};
  c.methods = {"rk4"};
  const auto result = measure_convergence(c);
  ASSERT_EQ(result.rows.size(), 2u);
  EXPECT_TRUE(result.rows[0].is_reference);
  EXPECT_FALSE(result.rows[1].is_reference);

  c.dts = {0.00015, 0.0003};
  EXPECT_THROW(measure_convergence(c), ConfigError);
  c.dts = {0.001};
  EXPECT_THROW(measure_convergence(c), ConfigError);
  c.dts = {0.001, 0.002};
  c.reference = "exact";
  c.problem.id = "ghaffari";
  EXPECT_THROW(measure_convergence(c), ConfigError);
}

TEST(LogLogSlope, ExactPowerLaw) {
  EXPECT_NEAR(log_log_slope({1, 2, 4}, {3, 12, 48}), 2.0, 1e-12);
  EXPECT_THROW(log_log_slope({1}, {1}), InvalidInput);
}

TEST(PropertySuite, PassesForLyapunovWeight) {
  ExperimentConfig c;
  c.samples = 1000;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_property_suite(c, out, err), kExitOk) << out.str() << err.str();
  EXPECT_NE(out.str().find("PASS lyapunov-decrease"), std::string::npos);
}

TEST(PropertySuite, EulerDegenerateWeightFails) {
  ExperimentConfig c;
  c.weight = WeightRecipe::kConstant;
  c.margin = 0.0;
  c.samples = 200;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_property_suite(c, out, err), kExitPropertyViolation);
  EXPECT_NE(out.str().find("counterexample y="), std::string::npos);
}

TEST(PropertySuite, CombinedWeightOnCoupledDecay) {
  ExperimentConfig c;
  c.problem.id = "coupled_decay";
  c.weight = WeightRecipe::kCombined;
  c.samples = 300;
  const auto result = run_property_suite(c);
  EXPECT_TRUE(result.passed());
  EXPECT_EQ(result.reports.size(), 3u);
  EXPECT_TRUE(result.face_violations.empty());
}

TEST(PropertySuite, ZeroSamplesRejected) {
  ExperimentConfig c;
  c.samples = 0;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_property_suite(c, out, err), kExitConfig);
}

TEST(PropertySuite, SameSeedSameReport) {
  ExperimentConfig c;
  c.weight = WeightRecipe::kConstant;
  c.margin = 0.0;
  c.samples = 100;
  std::ostringstream a, b, err;
  cmd_property_suite(c, a, err);
  cmd_property_suite(c, b, err);
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace nsfd::harness
