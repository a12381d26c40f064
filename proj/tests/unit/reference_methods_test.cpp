#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nsfd/errors.hpp"
#include "nsfd/problems.hpp"
#include "nsfd/reference_methods.hpp"
#include "test_support.hpp"

namespace nsfd {
namespace {

using testing::reference_params;

const problems::LinearDecay1D kDecay(1.0);

double observed_order(OneStepMethod method) {
  const auto sys = kDecay.system();
  const double T = 1.0;
  std::vector<double> errors;
  for (double dt : {0.1, 0.05, 0.025}) {
    const auto steps = static_cast<std::size_t>(std::lround(T / dt));
    const auto traj = integrate_with(method, sys, State{1.0}, dt, steps);
    errors.push_back(std::abs(traj.final_state[0] - kDecay.exact(1.0, T)));
  }
  return std::log2(errors[0] / errors[2]) / 2.0;
}

TEST(ReferenceMethods, HandExamples) {
  const auto sys = kDecay.system();
  EXPECT_EQ(euler_step(sys, State{2.0}, 0.5), State{1.0});
  EXPECT_EQ(rk2_trapezoidal_step(sys, State{2.0}, 0.5), State{1.25});
  EXPECT_NEAR(rk4_step(sys, State{1.0}, 0.1)[0], 0.9048375, 1e-15);
}

TEST(ReferenceMethods, FixedPoint) {
  const auto sys = reference_params().system();
  for (auto m : {OneStepMethod::kEuler, OneStepMethod::kRk2Trapezoidal, OneStepMethod::kRk4}) {
    for (double dt : {1e-6, 1.0, 1e3}) EXPECT_EQ(step_with(m, sys, State{0.0, 0.0}, dt), (State{0.0, 0.0}));
  }
}

TEST(ReferenceMethods, ConvergenceOrders) {
  EXPECT_NEAR(observed_order(OneStepMethod::kEuler), 1.0, 0.3);
  EXPECT_NEAR(observed_order(OneStepMethod::kRk2Trapezoidal), 2.0, 0.2);
  EXPECT_NEAR(observed_order(OneStepMethod::kRk4), 4.0, 0.3);
}

TEST(ReferenceMethods, Names) {
  EXPECT_EQ(method_from_name("rk2_trapezoidal"), OneStepMethod::kRk2Trapezoidal);
  EXPECT_EQ(method_name(OneStepMethod::kRk4), "rk4");
  EXPECT_THROW(method_from_name("midpoint"), InvalidInput);
}

TEST(ReferenceMethods, Errors) {
  const auto sys = kDecay.system();
  EXPECT_THROW(euler_step(sys, State{1.0}, 0.0), InvalidInput);
  EXPECT_THROW(rk4_step(sys, State{1.0, 2.0}, 0.1), InvalidInput);
}

TEST(IntegrateWith, TruncatesDivergentRun) {
  // y' = y^2 blows up in finite time; Euler overflows after a few steps.
  const OdeSystem blowup(
      1, [](std::span<const double> y, std::span<double> out) { out[0] = y[0] * y[0]; }, State{0.0});
  const auto traj = integrate_with(OneStepMethod::kEuler, blowup, State{1.0}, 1.0, 100);
  ASSERT_TRUE(traj.diverged_at.has_value());
  EXPECT_FALSE(traj.complete());
  EXPECT_EQ(traj.states.size(), *traj.diverged_at + 1);
  EXPECT_TRUE(traj.states.back().all_finite());
  EXPECT_NE(traj.diagnostic.find("step " + std::to_string(*traj.diverged_at)), std::string::npos);
}

TEST(IntegrateWith, SingleStepAndRest) {
  const auto sys = reference_params().system();
  const auto one = integrate_with(OneStepMethod::kRk4, sys, State{0.5, 0.01}, 0.1, 1);
  EXPECT_EQ(one.states.back(), rk4_step(sys, State{0.5, 0.01}, 0.1));
  const auto rest = integrate_with(OneStepMethod::kEuler, sys, State{0.0, 0.0}, 0.8, 50);
  for (const auto& y : rest.states) EXPECT_EQ(y, (State{0.0, 0.0}));
}

// Euler and RK2 at dt = 0.8 do not keep V decreasing.
TEST(IntegrateWith, LyapunovViolationWitness) {
  const auto sys = reference_params().system();
  const QuadraticLyapunov v({1.0, 1.0}, State{0.0, 0.0});
  for (auto m : {OneStepMethod::kEuler, OneStepMethod::kRk2Trapezoidal}) {
    const auto traj = integrate_with(m, sys, State{0.5, 0.01}, 0.8, 2000);
    bool increased = false;
    for (std::size_t k = 0; k + 1 < traj.states.size() && !increased; ++k) {
      increased = v(traj.states[k + 1]) > v(traj.states[k]);
    }
    EXPECT_TRUE(increased) << method_name(m);
  }
}

TEST(IntegrateWith, Rk4ReferenceSpiralsIn) {
  const auto sys = reference_params().system();
  IntegrationOptions options;
  options.keep_states = false;
  int sign_changes = 0;
  double previous = 0.5;
  options.observer = [&](const StepRecord& r) {
    if ((r.y[0] > 0.0) != (previous > 0.0)) ++sign_changes;
    previous = r.y[0];
  };
  const auto traj = integrate_with(OneStepMethod::kRk4, sys, State{0.5, 0.01}, 1e-4, 1'000'000, options);
  EXPECT_TRUE(traj.complete());
  EXPECT_LT(max_norm(traj.final_state), 0.5);
  EXPECT_GE(sign_changes, 20);  // about 16 turns by t = 100
}

}  // namespace
}  // namespace nsfd
