#include "nsfd/problems.hpp"

#include <cmath>

#include "nsfd/errors.hpp"

namespace nsfd::problems {

namespace {

void require_two(const State& y) {
  if (y.size() != 2) {
    throw InvalidInput("test system is two-dimensional, got " + std::to_string(y.size()) +
                       " components");
  }
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidInput(std::string(what) + " must be finite and strictly positive");
  }
}

}  // namespace

GhaffariSystem::GhaffariSystem(double a, double b, double c, double d) : A(a), B(b), C(c), D(d) {
  require_positive(A, "A");
  require_positive(B, "B");
  require_positive(C, "C");
  require_positive(D, "D");
}

OdeSystem GhaffariSystem::system() const {
  const double a = A, b = B, c = C, d = D;
  return OdeSystem(
      2,
      [a, b, c, d](std::span<const double> y, std::span<double> out) {
        out[0] = -a * y[0] * y[0] * y[0] + b * y[1];
        out[1] = -c * y[0] - d * y[1] * y[1] * y[1];
      },
      State{0.0, 0.0}, "ghaffari");
}

State ghaffari_rhs(const GhaffariSystem& p, const State& y) {
  require_two(y);
  return State::unchecked({-p.A * y[0] * y[0] * y[0] + p.B * y[1],
                           -p.C * y[0] - p.D * y[1] * y[1] * y[1]});
}

QuadraticLyapunov ghaffari_lyapunov(const GhaffariSystem& p, double alpha2) {
  require_positive(alpha2, "alpha2");
  return QuadraticLyapunov({p.C / p.B * alpha2, alpha2}, State{0.0, 0.0});
}

double ghaffari_tau_L(const GhaffariSystem& p, const std::array<double, 2>& alphas,
                      const State& y) {
  require_two(y);
  require_positive(alphas[0], "alpha1");
  require_positive(alphas[1], "alpha2");
  if (at_equilibrium(y, State{0.0, 0.0})) {
    throw HypothesisViolation("bound undefined at equilibrium");
  }
  const double y1 = y[0], y2 = y[1];
  const double f1 = -p.A * y1 * y1 * y1 + p.B * y2;
  const double f2 = -p.C * y1 - p.D * y2 * y2 * y2;
  const double numerator = alphas[0] * f1 * f1 + alphas[1] * f2 * f2;
  const double denominator =
      2.0 * p.A * alphas[0] * std::pow(y1, 4) + 2.0 * p.D * alphas[1] * std::pow(y2, 4);
  if (!(denominator > 0.0)) {
    throw HypothesisViolation("Lyapunov rate underflows to zero at " + to_string(y));
  }
  return numerator / denominator;
}

LinearDecay1D::LinearDecay1D(double rate) : lambda(rate) { require_positive(lambda, "lambda"); }

OdeSystem LinearDecay1D::system() const {
  const double rate = lambda;
  return OdeSystem(
      1, [rate](std::span<const double> y, std::span<double> out) { out[0] = -rate * y[0]; },
      State{0.0}, "linear_decay");
}

double LinearDecay1D::exact(double y0, double t) const { return y0 * std::exp(-lambda * t); }

OdeSystem exchange_system() {
  return OdeSystem(
      2,
      [](std::span<const double> y, std::span<double> out) {
        out[0] = y[1] - y[0];
        out[1] = y[0] - y[1];
      },
      State{0.0, 0.0}, "exchange");
}

OdeSystem coupled_decay_system() {
  return OdeSystem(
      2,
      [](std::span<const double> y, std::span<double> out) {
        out[0] = -y[0] + 0.5 * y[1];
        out[1] = -y[1] + 0.5 * y[0];
      },
      State{0.0, 0.0}, "coupled_decay");
}

}  // namespace nsfd::problems
