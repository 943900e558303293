#pragma once

#include "kekulattice/bloch.hpp"

namespace kekulattice {

/// The only k-dependent inputs of the characteristic polynomial of A*A.
///
///   Z(k)  = 3 - e^{-ik.b1} - e^{-ik.b2} - e^{ik.(b1+b2)}
///   Zt(k) = 3 - e^{ik.(b1-b2)} - e^{-ik.(2b1+b2)} - e^{-ik.(b1+2b2)}
///
/// with |Z|^2 = 6 Re Z - 2 Re Zt.
struct ZFactor {
  Complex z;
  Complex zTilde;
};

ZFactor z_factor(const Vec2& k);

/// Coefficients of chi(x) = x^3 - alpha x^2 + beta x - gamma for A*A(k),
/// written through the symmetric statistics E, S, s, W of (t, u, v):
///
///   alpha = 3 S^2
///   beta  = beta0 + beta1 W,   beta0 = 3 S^4 - (3/4)(9E^2 - S^2)^2,  beta1 = 6 E Re Z
///   gamma = |(27/2) E s^2 + W Z|^2 = gamma0 + gamma1 W + gamma2 W^2
struct CharPolyCoeffs {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double zRe = 0.0;
  double zAbs2 = 0.0;
  double beta0 = 0.0;
  double beta1 = 0.0;
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

CharPolyCoeffs charpoly_coeffs(const HoppingTriple& cfg, const Vec2& k);

// Same coefficients for prescribed (E, s, W) and Z, used to sweep W along a
// circle of fixed E and s.
CharPolyCoeffs charpoly_coeffs(double mean, double spread, double product, Complex z);

// The root g >= sqrt(alpha) of (1/4)(g^2 - alpha)^2 = beta + 2 sqrt(gamma) g,
// which equals sqrt(x1) + sqrt(x2) + sqrt(x3) for the roots x_i of chi.
// Throws std::invalid_argument for gamma < 0 and NumericalFailure when no
// root is bracketed on [sqrt(alpha), sqrt(3 alpha)].
double g_from_quartic(const CharPolyCoeffs& coeffs);

enum class ProjectionCase { Sphere, Circle };

struct KekuleProjection {
  double tTilde = 0.0;
  double vTilde = 0.0;
  ProjectionCase caseTag = ProjectionCase::Circle;

  HoppingTriple triple() const { return {tTilde, tTilde, vTilde}; }
};

// Kekulé-symmetric replacement (t~, t~, v~) with energy no larger than cfg's.
// E <= s/sqrt(2) (boundary included) maps to (0, S); otherwise to
// (E - s/sqrt(2), E + s sqrt(2)).
KekuleProjection kekule_projection(const HoppingTriple& cfg);

struct WExtrema {
  double wMin = 0.0;
  double wMax = 0.0;
};

// Extrema of W = tuv over the circle of triples with mean E and spread s.
WExtrema w_extrema(double mean, double spread);

// (9/4) E s^2, the k-uniform lower bound on gamma1 / (2 gamma2) for E > s/sqrt(2).
double w_monotonicity_floor(double mean, double spread);

}  // namespace kekulattice
