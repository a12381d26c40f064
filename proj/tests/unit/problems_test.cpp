#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nsfd/errors.hpp"
#include "nsfd/problems.hpp"
#include "test_support.hpp"

namespace nsfd::problems {
namespace {

TEST(Ghaffari, Rhs) {
  const auto p = GhaffariSystem::reference();
  EXPECT_EQ(ghaffari_rhs(p, State{0.0, 0.0}), (State{0.0, 0.0}));
  const State f = ghaffari_rhs(p, State{0.5, 0.01});
  EXPECT_NEAR(f[0], -0.01, 1e-17);
  EXPECT_NEAR(f[1], -0.5000001, 1e-16);
  EXPECT_EQ(ghaffari_rhs(p, State{1.0, 0.0}), (State{-0.16, -1.0}));
  EXPECT_THROW(ghaffari_rhs(p, State{1.0}), InvalidInput);
  EXPECT_EQ(p.system()(State{0.5, 0.01}), f);
}

TEST(Ghaffari, ParametersMustBePositive) {
  EXPECT_THROW(GhaffariSystem(0.0, 1, 1, 1), InvalidInput);
  EXPECT_THROW(GhaffariSystem(1, -1, 1, 1), InvalidInput);
  EXPECT_THROW(GhaffariSystem(1, 1, 1, NAN), InvalidInput);
}

TEST(Ghaffari, Lyapunov) {
  const auto p = GhaffariSystem::reference();
  EXPECT_EQ(ghaffari_lyapunov(p, 1.0).alphas(), (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(ghaffari_lyapunov(GhaffariSystem(1, 2, 6, 1), 1.0).alphas(),
            (std::vector<double>{3.0, 1.0}));
  const auto v = ghaffari_lyapunov(GhaffariSystem(0.3, 5, 5, 0.2), 2.0);
  EXPECT_EQ(v.alphas()[0], v.alphas()[1]);
  EXPECT_THROW(ghaffari_lyapunov(p, 0.0), InvalidInput);
}

TEST(Ghaffari, TauLExamples) {
  const auto p = GhaffariSystem::reference();
  EXPECT_NEAR(ghaffari_tau_L(p, {1.0, 1.0}, State{0.5, 0.01}), 12.505003749500124, 1e-12);
  EXPECT_NEAR(ghaffari_tau_L(p, {1.0, 1.0}, State{1.0, 0.0}), 3.205, 1e-14);
  EXPECT_THROW(ghaffari_tau_L(p, {1.0, 1.0}, State{0.0, 0.0}), HypothesisViolation);
}

TEST(Ghaffari, TauLMatchesGenericBound) {
  std::mt19937_64 rng(59);
  for (int s = 0; s < 1000; ++s) {
    const GhaffariSystem p(uniform(rng, 0.05, 2), uniform(rng, 0.05, 2), uniform(rng, 0.05, 2),
                           uniform(rng, 0.05, 2));
    const auto v = ghaffari_lyapunov(p, uniform(rng, 0.1, 3));
    const State y = testing::random_box_state(rng);
    const double generic = tau_lyapunov_bound(v, p.system(), y);
    const double special = ghaffari_tau_L(p, {v.alphas()[0], v.alphas()[1]}, y);
    EXPECT_LE(testing::relative_gap(generic, special), 1e-12) << to_string(y);
  }
}

TEST(Ghaffari, NotQuasiPositiveOnSecondFace) {
  const auto p = GhaffariSystem::reference();
  EXPECT_GE(ghaffari_rhs(p, State{0.0, 2.0})[0], 0.0);
  EXPECT_LT(ghaffari_rhs(p, State{2.0, 0.0})[1], 0.0);
}

TEST(LinearDecay, ExactSolution) {
  const LinearDecay1D decay(2.0);
  EXPECT_EQ(decay.exact(3.0, 0.0), 3.0);
  EXPECT_DOUBLE_EQ(decay.exact(1.0, 0.5), std::exp(-1.0));
  EXPECT_EQ(decay.system()(State{1.5}), State{-3.0});
  EXPECT_THROW(LinearDecay1D(0.0), InvalidInput);
}

TEST(DemonstrationSystems, Fields) {
  EXPECT_EQ(exchange_system()(State{1.0, 3.0}), (State{2.0, -2.0}));
  EXPECT_EQ(exchange_system()(State{2.5, 2.5}), (State{0.0, 0.0}));
  EXPECT_EQ(coupled_decay_system()(State{1.0, 2.0}), (State{0.0, -1.5}));
}

}  // namespace
}  // namespace nsfd::problems
