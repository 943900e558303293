#include "kekulattice/small_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace kekulattice {

namespace {

constexpr double kDegenerateRel = 1e-12;

double chi(const HermitianCubic& c, double x) {
  return ((x - c.trace) * x + c.minors) * x - c.det;
}

double chi_prime(const HermitianCubic& c, double x) {
  return (3.0 * x - 2.0 * c.trace) * x + c.minors;
}

// One guarded Newton step; keeps the old root unless the residual shrinks.
double polish(const HermitianCubic& c, double x) {
  const double d = chi_prime(c, x);
  if (d == 0.0) {
    return x;
  }
  const double y = x - chi(c, x) / d;
  return std::abs(chi(c, y)) < std::abs(chi(c, x)) ? y : x;
}

// Returns false when the root configuration is too close to degenerate for
// the trigonometric formula.
bool trig_roots(const HermitianCubic& c, std::array<double, 3>& out) {
  const double scale = std::max({std::abs(c.trace), std::sqrt(c.spread), 1e-300});
  if (c.spread <= kDegenerateRel * scale * scale) {
    return false;
  }
  const double p = c.spread;
  const double q = (2.0 * c.trace * c.trace - 9.0 * c.minors) * c.trace + 27.0 * c.det;
  const double p3 = 4.0 * p * p * p;
  const double disc = p3 - q * q;
  if (disc <= kDegenerateRel * p3) {
    return false;
  }
  const double theta = std::atan2(std::sqrt(disc), q) / 3.0;
  const double r = 2.0 * std::sqrt(p);
  constexpr double third = 2.0 * std::numbers::pi / 3.0;
  out = {(c.trace + r * std::cos(theta)) / 3.0,
         (c.trace + r * std::cos(theta + third)) / 3.0,
         (c.trace + r * std::cos(theta - third)) / 3.0};
  for (double& x : out) {
    x = polish(c, x);
  }
  std::sort(out.begin(), out.end());
  return true;
}

}  // namespace

HermitianCubic hermitian3_invariants(const Mat3c& m) {
  const double d0 = m(0, 0).real();
  const double d1 = m(1, 1).real();
  const double d2 = m(2, 2).real();
  const double o01 = std::norm(m(0, 1));
  const double o02 = std::norm(m(0, 2));
  const double o12 = std::norm(m(1, 2));
  HermitianCubic c;
  c.trace = d0 + d1 + d2;
  c.minors = d0 * d1 + d0 * d2 + d1 * d2 - (o01 + o02 + o12);
  c.det = d0 * d1 * d2 + 2.0 * (m(0, 1) * m(1, 2) * m(2, 0)).real() - d0 * o12 - d1 * o02 - d2 * o01;
  c.spread = 0.5 * ((d0 - d1) * (d0 - d1) + (d1 - d2) * (d1 - d2) + (d2 - d0) * (d2 - d0)) +
             3.0 * (o01 + o02 + o12);
  return c;
}

Eigen::VectorXd symmetric_jacobi_eigenvalues(Eigen::MatrixXd m) {
  const Eigen::Index n = m.rows();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        off += m(p, q) * m(p, q);
      }
    }
    if (off <= 1e-300 || off <= 1e-32 * m.squaredNorm()) {
      break;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) {
          continue;
        }
        const double tau = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (Eigen::Index r = 0; r < n; ++r) {
          const double mrp = m(r, p);
          const double mrq = m(r, q);
          m(r, p) = c * mrp - s * mrq;
          m(r, q) = s * mrp + c * mrq;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const double mpr = m(p, r);
          const double mqr = m(q, r);
          m(p, r) = c * mpr - s * mqr;
          m(q, r) = s * mpr + c * mqr;
        }
      }
    }
  }
  Eigen::VectorXd w = m.diagonal();
  std::sort(w.data(), w.data() + w.size());
  return w;
}

std::array<double, 3> hermitian3_eigenvalues_jacobi(const Mat3c& m) {
  Eigen::MatrixXd real(6, 6);
  real.topLeftCorner(3, 3) = m.real();
  real.bottomRightCorner(3, 3) = m.real();
  real.topRightCorner(3, 3) = -m.imag();
  real.bottomLeftCorner(3, 3) = m.imag();
  const Eigen::VectorXd w = symmetric_jacobi_eigenvalues(real);
  // Each eigenvalue of the Hermitian matrix appears twice in the embedding.
  return {0.5 * (w(0) + w(1)), 0.5 * (w(2) + w(3)), 0.5 * (w(4) + w(5))};
}

std::array<double, 3> hermitian3_eigenvalues(const Mat3c& m) {
  const HermitianCubic c = hermitian3_invariants(m);
  std::array<double, 3> out{};
  if (trig_roots(c, out)) {
    return out;
  }
  return hermitian3_eigenvalues_jacobi(m);
}

std::array<double, 3> singular_values3(const Mat3c& a) {
  const Mat3c gram = a.adjoint() * a;
  HermitianCubic c = hermitian3_invariants(gram);
  // |det A|^2 keeps more relative accuracy than det(A*A) near rank loss.
  c.det = std::norm(a.determinant());
  std::array<double, 3> x{};
  if (!trig_roots(c, x)) {
    x = hermitian3_eigenvalues_jacobi(gram);
  }
  for (double& v : x) {
    v = std::sqrt(std::max(v, 0.0));
  }
  return x;
}

}  // namespace kekulattice
