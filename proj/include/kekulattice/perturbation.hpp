#pragma once

#include "kekulattice/bloch.hpp"
#include "kekulattice/lattice.hpp"

namespace kekulattice {

// theta(k) = arg(1 + e^{ik.a1} + e^{ik.a2}). Throws std::invalid_argument
// when m(k) <= 1e-12.
double phase_theta(const Vec2& k);

/// Pieces of the second-order coefficient c(k) of the Kekulé perturbation
/// (t + 2h, t - h, t - h) around the pristine lattice.
///
/// With P_j = e^{i theta_j}, j = 0, 1, 2 at k, k + b1*, k + b2*:
///
///   Theta1 = |P0 conj(P2) - P2 conj(P1)|^2
///   Theta2 = |P2 conj(P1) - P1 conj(P0)|^2
///   Theta3 = |P1 conj(P0) - P0 conj(P2)|^2
///
///   c = m2^2 Theta1 / (m0 + m1) + m1^2 Theta2 / (m0 + m2) + m0^2 Theta3 / (m1 + m2)
struct PerturbationIntegrand {
  Vec2 k = Vec2::Zero();
  double m0 = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double theta0 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double Theta1 = 0.0;
  double Theta2 = 0.0;
  double Theta3 = 0.0;
  double cValue = 0.0;
};

// Throws std::invalid_argument if any of the three folded points is a Dirac
// point (m < 1e-12), which in particular rejects k = 0 mod B6.
PerturbationIntegrand perturbation_integrand(const Vec2& k);

double c_of_k(const Vec2& k);

// Average of c over a B6 grid.
double c_average(const QuadratureGrid& gridB6);

// mu_c = (1/9) avg_B6(c) - (2/3) avg_B2(m), the B2 average taken on a grid
// with the same n and shift. The error is |mu_c(n) - mu_c(n/2)|.
Estimate mu_c(const QuadratureGrid& gridB6);

// avg_B2(3/m - m), an upper bound for the rigidity above which the pristine
// lattice is the unique minimizer.
Estimate mu_c_prime_bound(const QuadratureGrid& gridB2);

// (1/t) avg_B6(c): minus the h^2 coefficient of the per-cell quantum energy
// along (t + 2h, t - h, t - h).
double hessian_coefficient(double t, const QuadratureGrid& gridB6);

// E(t*) + (3 delta^2 / (4 t*)) [mu + avg(m) - 3 avg(1/m)] with delta^2 the
// mean square of cfg - t* (1, 1, 1). t* and E(t*) are taken on gridB6, the
// bracket averages on gridB2.
double convexity_lower_bound(const HoppingTriple& cfg, double mu, const QuadratureGrid& gridB2,
                             const QuadratureGrid& gridB6);

}  // namespace kekulattice
