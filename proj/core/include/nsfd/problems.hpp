#pragma once

#include <array>

#include "nsfd/lyapunov.hpp"
#include "nsfd/ode_system.hpp"
#include "nsfd/state.hpp"

namespace nsfd::problems {

/// Nonlinear oscillator with cubic damping and a globally asymptotically
/// stable origin:
///
///   y1' = -A y1^3 + B y2,
///   y2' = -C y1 - D y2^3,      A, B, C, D > 0.
///
/// V = alpha1 y1^2 + alpha2 y2^2 with alpha1 = (C / B) alpha2 is a strict
/// Lyapunov function with Vdot = -2 alpha1 A y1^4 - 2 alpha2 D y2^4.
struct GhaffariSystem {
  GhaffariSystem(double a, double b, double c, double d);

  /// (0.16, 1, 1, 0.1), the configuration used in the numerical study.
  static GhaffariSystem reference() { return {0.16, 1.0, 1.0, 0.1}; }

  OdeSystem system() const;

  double A, B, C, D;
};

State ghaffari_rhs(const GhaffariSystem& p, const State& y);

/// V with alpha = ((C / B) alpha2, alpha2) centered at the origin.
QuadraticLyapunov ghaffari_lyapunov(const GhaffariSystem& p, double alpha2);

/// tau_L written out for this system. Agrees with the generic bound.
double ghaffari_tau_L(const GhaffariSystem& p, const std::array<double, 2>& alphas, const State& y);

/// y' = -lambda y with exact solution y0 exp(-lambda t).
struct LinearDecay1D {
  explicit LinearDecay1D(double lambda);

  OdeSystem system() const;
  double exact(double y0, double t) const;

  double lambda;
};

/// y1' = y2 - y1, y2' = y1 - y2. Quasi-positive; every point of the diagonal
/// is an equilibrium (the origin is the designated one).
OdeSystem exchange_system();

/// y1' = -y1 + 0.5 y2, y2' = -y2 + 0.5 y1. Quasi-positive, with the origin
/// globally asymptotically stable and V = y1^2 + y2^2 a strict Lyapunov
/// function (Vdot = -2 (y1^2 - y1 y2 + y2^2)).
OdeSystem coupled_decay_system();

}  // namespace nsfd::problems
