#include "kekulattice/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "kekulattice/error.hpp"
#include "kekulattice/parallel.hpp"

namespace kekulattice {

namespace {

void require_zone(const QuadratureGrid& grid, Zone zone, const char* who) {
  if (grid.zone != zone) {
    throw std::invalid_argument(std::string(who) + ": expected a " + std::string(zone_name(zone)) +
                                " grid, got " + std::string(zone_name(grid.zone)));
  }
}

void require_positive_mu(double mu, const char* who) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument(std::string(who) + ": mu must be positive");
  }
}

}  // namespace

QuantumTerm::QuantumTerm(QuadratureGrid grid) : grid_(std::move(grid)) {
  require_zone(grid_, Zone::B6, "QuantumTerm");
  // Real amplitudes give A(-k) = conj(A(k)), so -k carries the same singular
  // values. When the grid maps onto itself under k -> -k each pair is summed once.
  const int n = grid_.n;
  const bool paired = std::all_of(grid_.shift.begin(), grid_.shift.end(),
                                  [](double s) { return s == 0.0 || s == 0.5; });
  auto mirror = [&](int i, double s) { return ((-i - static_cast<int>(2.0 * s)) % n + n) % n; };
  phases_.reserve(grid_.size());
  multiplicity_.reserve(grid_.size());
  for (std::size_t p = 0; p < grid_.size(); ++p) {
    double mult = 1.0;
    if (paired) {
      const int i = static_cast<int>(p / static_cast<std::size_t>(n));
      const int j = static_cast<int>(p % static_cast<std::size_t>(n));
      const std::size_t q = static_cast<std::size_t>(mirror(i, grid_.shift[0])) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(mirror(j, grid_.shift[1]));
      if (q < p) {
        continue;
      }
      mult = q == p ? 1.0 : 2.0;
    }
    phases_.push_back(bloch_phases(grid_.points[p]));
    multiplicity_.push_back(mult);
  }
}

double QuantumTerm::vtr_abs_T(const HoppingTriple& cfg) const {
  const double sum = block_sum(phases_.size(), [&](std::size_t i) {
    return multiplicity_[i] * singular_value_sum(cfg, phases_[i]);
  });
  return grid_.weight * sum / 3.0;
}

double vtr_abs_T(const HoppingTriple& cfg, const QuadratureGrid& grid) {
  require_zone(grid, Zone::B6, "vtr_abs_T");
  const double avg = grid_average(grid, [&](const Vec2& k) {
    return singular_value_sum(cfg, bloch_phases(k));
  });
  return avg / 3.0;
}

double vtr_abs_H(const QuadratureGrid& grid) {
  if (grid.zone == Zone::B6) {
    return vtr_abs_T({1.0, 1.0, 1.0}, grid);
  }
  return grid_average(grid, [](const Vec2& k) { return dispersion_m(k); });
}

double vtr_inv_abs_H(const QuadratureGrid& grid) {
  require_zone(grid, Zone::B2, "vtr_inv_abs_H");
  return grid_average(grid, [](const Vec2& k) { return 1.0 / dispersion_m(k); });
}

QuadratureGrid coarse_grid(const QuadratureGrid& grid) {
  return make_grid(grid.zone, std::max(grid.n / 2, 2), grid.shift);
}

double elastic_energy(const HoppingTriple& cfg, double mu) {
  const double dt = cfg.t - 1.0;
  const double du = cfg.u - 1.0;
  const double dv = cfg.v - 1.0;
  return 0.25 * mu * (dt * dt + du * du + dv * dv);
}

EnergyBreakdown total_energy(const HoppingTriple& cfg, double mu, const QuadratureGrid& grid) {
  require_positive_mu(mu, "total_energy");
  require_zone(grid, Zone::B6, "total_energy");
  EnergyBreakdown eb;
  eb.quantum = -vtr_abs_T(cfg, grid);
  eb.elastic = elastic_energy(cfg, mu);
  eb.total = eb.quantum + eb.elastic;
  eb.gridN = grid.n;
  eb.quadError = std::abs(eb.quantum + vtr_abs_T(cfg, coarse_grid(grid)));
  return eb;
}

double energy_value(const HoppingTriple& cfg, double mu, const QuantumTerm& quantum) {
  return -quantum.vtr_abs_T(cfg) + elastic_energy(cfg, mu);
}

double pristine_optimum(double mu, const QuadratureGrid& grid) {
  require_positive_mu(mu, "pristine_optimum");
  return 1.0 + 2.0 / (3.0 * mu) * vtr_abs_H(grid);
}

ElasticModel ElasticModel::quadratic() {
  ElasticModel m;
  m.kind = Kind::Quadratic;
  m.F = [](double x) { return (x - 1.0) * (x - 1.0); };
  m.Fprime = [](double x) { return 2.0 * (x - 1.0); };
  m.strongConvexityAlpha = 1.0;
  m.minimumAt = 1.0;
  return m;
}

ElasticModel ElasticModel::custom(std::function<double(double)> f, std::function<double(double)> fprime,
                                  double alpha, double minimum_at) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("ElasticModel: strong convexity constant must be positive");
  }
  if (!(minimum_at > 0.0)) {
    throw std::invalid_argument("ElasticModel: minimum must be at a positive amplitude");
  }
  for (int i = 1; i <= 64; ++i) {
    const double t = -0.125 * i;
    if (f(t) < f(-t)) {
      throw std::invalid_argument("ElasticModel: F(t) < F(|t|) for negative t = " + std::to_string(t));
    }
  }
  ElasticModel m;
  m.kind = Kind::Custom;
  m.F = std::move(f);
  m.Fprime = std::move(fprime);
  m.strongConvexityAlpha = alpha;
  m.minimumAt = minimum_at;
  return m;
}

ElasticModel ElasticModel::scaled(double factor) const {
  if (!(factor > 0.0)) {
    throw std::invalid_argument("ElasticModel::scaled: factor must be positive");
  }
  ElasticModel m = *this;
  m.kind = Kind::Custom;
  m.F = [f = F, factor](double x) { return factor * f(x); };
  m.Fprime = [fp = Fprime, factor](double x) { return factor * fp(x); };
  m.strongConvexityAlpha = factor * strongConvexityAlpha;
  return m;
}

namespace {

double solve_pristine(const ElasticModel& model, double mu, double vtr_h) {
  const double target = 4.0 / (3.0 * mu) * vtr_h;
  double lo = model.minimumAt;
  double hi = model.minimumAt + 1e6;
  if (model.Fprime(hi) < target) {
    throw NumericalFailure("generalized_pristine_optimum: F' does not reach the Euler-Lagrange target");
  }
  while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (model.Fprime(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double generalized_pristine_optimum(const ElasticModel& model, double mu, const QuadratureGrid& grid) {
  require_positive_mu(mu, "generalized_pristine_optimum");
  return solve_pristine(model, mu, vtr_abs_H(grid));
}

double generalized_critical_mu_bound(const ElasticModel& model, const QuadratureGrid& gridB2) {
  require_zone(gridB2, Zone::B2, "generalized_critical_mu_bound");
  const double vtr_h = vtr_abs_H(gridB2);
  const double vtr_m = 1.5 * vtr_inv_abs_H(gridB2) - vtr_h / 6.0;
  auto margin = [&](double mu) {
    return 0.5 * mu * model.strongConvexityAlpha - vtr_m / solve_pristine(model, mu, vtr_h);
  };
  // t*(mu) needs F' to reach ~1/mu within [C, C + 1e6], so start well above 1e-6.
  double lo = 1e-3;
  if (margin(lo) >= 0.0) {
    return lo;
  }
  double hi = 1.0;
  while (margin(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) {
      throw NumericalFailure("generalized_critical_mu_bound: no critical rigidity below 1e9");
    }
  }
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (margin(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace kekulattice
