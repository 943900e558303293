#include "kekulattice/sympoly.hpp"

#include <cmath>
#include <stdexcept>

#include "kekulattice/error.hpp"

namespace kekulattice {

namespace {

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

ZFactor z_factor(const Vec2& k) {
  const auto& lb = basis();
  const double k1 = k.dot(lb.b1);
  const double k2 = k.dot(lb.b2);
  ZFactor zf;
  zf.z = 3.0 - phase(-k1) - phase(-k2) - phase(k1 + k2);
  zf.zTilde = 3.0 - phase(k1 - k2) - phase(-(2.0 * k1 + k2)) - phase(-(k1 + 2.0 * k2));
  return zf;
}

CharPolyCoeffs charpoly_coeffs(double mean, double spread, double product, Complex z) {
  const double e = mean;
  const double s2 = spread * spread;
  const double big_s2 = 3.0 * (e * e + s2);
  const double w = product;
  const double det0 = 13.5 * e * s2;

  CharPolyCoeffs c;
  c.zRe = z.real();
  c.zAbs2 = std::norm(z);
  c.alpha = 3.0 * big_s2;
  const double lift = 9.0 * e * e - big_s2;
  c.beta0 = 3.0 * big_s2 * big_s2 - 0.75 * lift * lift;
  c.beta1 = 6.0 * e * c.zRe;
  c.beta = c.beta0 + c.beta1 * w;
  c.gamma0 = det0 * det0;
  c.gamma1 = 2.0 * det0 * c.zRe;
  c.gamma2 = c.zAbs2;
  c.gamma = std::norm(det0 + w * z);
  return c;
}

CharPolyCoeffs charpoly_coeffs(const HoppingTriple& cfg, const Vec2& k) {
  return charpoly_coeffs(cfg.mean(), cfg.spread(), cfg.product(), z_factor(k).z);
}

double g_from_quartic(const CharPolyCoeffs& coeffs) {
  if (coeffs.gamma < 0.0) {
    throw std::invalid_argument("g_from_quartic: gamma must be non-negative");
  }
  const double alpha = coeffs.alpha;
  if (alpha <= 0.0) {
    return 0.0;
  }
  const double root_gamma = std::sqrt(coeffs.gamma);
  auto residual = [&](double g) {
    const double d = g * g - alpha;
    return 0.25 * d * d - coeffs.beta - 2.0 * root_gamma * g;
  };
  auto slope = [&](double g) { return g * (g * g - alpha) - 2.0 * root_gamma; };

  double lo = std::sqrt(alpha);
  // By Cauchy-Schwarz g <= sqrt(3 alpha); the margin absorbs rounding when
  // all three roots coincide.
  double hi = std::sqrt(3.0 * alpha) * (1.0 + 1e-12) + 1e-300;
  double flo = residual(lo);
  const double fhi = residual(hi);
  const double tol_f = 1e-14 * alpha * alpha;
  if (std::abs(flo) <= tol_f) {
    return lo;
  }
  if (flo > 0.0 || fhi < 0.0) {
    if (std::abs(fhi) <= tol_f) {
      return hi;
    }
    throw NumericalFailure("g_from_quartic: no root bracketed on [sqrt(alpha), sqrt(3 alpha)]");
  }

  // Newton steps safeguarded by the bracket.
  double g = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = residual(g);
    if (f < 0.0) {
      lo = g;
    } else {
      hi = g;
    }
    const double d = slope(g);
    double next = d != 0.0 ? g - f / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - g) <= 1e-12 || hi - lo <= 1e-12) {
      return next;
    }
    g = next;
  }
  return g;
}

KekuleProjection kekule_projection(const HoppingTriple& cfg) {
  const double e = cfg.mean();
  const double s = cfg.spread();
  const double r2 = std::sqrt(2.0);
  KekuleProjection p;
  if (e <= s / r2) {
    p.tTilde = 0.0;
    p.vTilde = cfg.norm();
    p.caseTag = ProjectionCase::Sphere;
  } else {
    p.tTilde = e - s / r2;
    p.vTilde = e + s * r2;
    p.caseTag = ProjectionCase::Circle;
  }
  return p;
}

WExtrema w_extrema(double mean, double spread) {
  const double r2 = std::sqrt(2.0);
  const double lo = mean - spread * r2;
  const double hi = mean + spread * r2;
  const double up = mean + spread / r2;
  const double dn = mean - spread / r2;
  return {lo * up * up, hi * dn * dn};
}

double w_monotonicity_floor(double mean, double spread) {
  if (!(mean > spread / std::sqrt(2.0))) {
    throw std::invalid_argument("w_monotonicity_floor: requires E > s / sqrt(2)");
  }
  return 2.25 * mean * spread * spread;
}

}  // namespace kekulattice
