#include "kekulattice/perturbation.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include "kekulattice/energy.hpp"

namespace kekulattice {

namespace {

constexpr double kDiracCutoff = 1e-12;

void require_zone(const QuadratureGrid& grid, Zone zone, const char* who) {
  if (grid.zone != zone) {
    throw std::invalid_argument(std::string(who) + ": expected a " + std::string(zone_name(zone)) + " grid");
  }
}

// Unit phase P = (1 + e^{ik.a1} + e^{ik.a2}) / m together with m.
std::pair<Complex, double> unit_phase(const Vec2& k) {
  const Complex p = pristine_factor(k);
  const double m = std::abs(p);
  if (m < kDiracCutoff) {
    throw std::invalid_argument("phase undefined at a Dirac point");
  }
  return {p / m, m};
}

double mu_c_value(const QuadratureGrid& gridB6) {
  const QuadratureGrid b2 = make_grid(Zone::B2, gridB6.n, gridB6.shift);
  return c_average(gridB6) / 9.0 - 2.0 / 3.0 * vtr_abs_H(b2);
}

double mu_c_prime_value(const QuadratureGrid& gridB2) {
  return grid_average(gridB2, [](const Vec2& k) {
    const double m = dispersion_m(k);
    return 3.0 / m - m;
  });
}

}  // namespace

double phase_theta(const Vec2& k) { return std::arg(unit_phase(k).first); }

PerturbationIntegrand perturbation_integrand(const Vec2& k) {
  const auto& lb = basis();
  const auto [p0, m0] = unit_phase(k);
  const auto [p1, m1] = unit_phase(k + lb.b1s);
  const auto [p2, m2] = unit_phase(k + lb.b2s);

  PerturbationIntegrand r;
  r.k = k;
  r.m0 = m0;
  r.m1 = m1;
  r.m2 = m2;
  r.theta0 = std::arg(p0);
  r.theta1 = std::arg(p1);
  r.theta2 = std::arg(p2);
  r.Theta1 = std::norm(p0 * std::conj(p2) - p2 * std::conj(p1));
  r.Theta2 = std::norm(p2 * std::conj(p1) - p1 * std::conj(p0));
  r.Theta3 = std::norm(p1 * std::conj(p0) - p0 * std::conj(p2));
  r.cValue = m2 * m2 * r.Theta1 / (m0 + m1) + m1 * m1 * r.Theta2 / (m0 + m2) + m0 * m0 * r.Theta3 / (m1 + m2);
  return r;
}

double c_of_k(const Vec2& k) { return perturbation_integrand(k).cValue; }

double c_average(const QuadratureGrid& gridB6) {
  require_zone(gridB6, Zone::B6, "c_average");
  return grid_average(gridB6, [](const Vec2& k) { return c_of_k(k); });
}

Estimate mu_c(const QuadratureGrid& gridB6) {
  require_zone(gridB6, Zone::B6, "mu_c");
  const double fine = mu_c_value(gridB6);
  const double coarse = mu_c_value(coarse_grid(gridB6));
  return {fine, std::abs(fine - coarse)};
}

Estimate mu_c_prime_bound(const QuadratureGrid& gridB2) {
  require_zone(gridB2, Zone::B2, "mu_c_prime_bound");
  const double fine = mu_c_prime_value(gridB2);
  const double coarse = mu_c_prime_value(coarse_grid(gridB2));
  return {fine, std::abs(fine - coarse)};
}

double hessian_coefficient(double t, const QuadratureGrid& gridB6) {
  if (!(t > 0.0)) {
    throw std::invalid_argument("hessian_coefficient: t must be positive");
  }
  return c_average(gridB6) / t;
}

double convexity_lower_bound(const HoppingTriple& cfg, double mu, const QuadratureGrid& gridB2,
                             const QuadratureGrid& gridB6) {
  require_zone(gridB2, Zone::B2, "convexity_lower_bound");
  require_zone(gridB6, Zone::B6, "convexity_lower_bound");
  const double t_star = pristine_optimum(mu, gridB6);
  const HoppingTriple pristine{t_star, t_star, t_star};
  const double e_star = -vtr_abs_T(pristine, gridB6) + elastic_energy(pristine, mu);
  const double ht = cfg.t - t_star;
  const double hu = cfg.u - t_star;
  const double hv = cfg.v - t_star;
  const double delta2 = (ht * ht + hu * hu + hv * hv) / 3.0;
  const double bracket = mu + vtr_abs_H(gridB2) - 3.0 * vtr_inv_abs_H(gridB2);
  return e_star + 3.0 * delta2 / (4.0 * t_star) * bracket;
}

}  // namespace kekulattice
