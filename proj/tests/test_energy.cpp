#include <cmath>

#include "support.hpp"

#include "kekulattice/energy.hpp"
#include "kekulattice/error.hpp"
#include "kekulattice/perturbation.hpp"

using namespace kekulattice;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const QuadratureGrid& grid64() {
  static const QuadratureGrid g = make_grid(Zone::B6, 64);
  return g;
}

const QuadratureGrid& grid64_b2() {
  static const QuadratureGrid g = make_grid(Zone::B2, 64);
  return g;
}

}  // namespace

TEST_CASE("trace per atom of simple configurations", "[energy]") {
  CHECK(vtr_abs_T({0.0, 0.0, 0.0}, grid64()) == 0.0);
  CHECK_THAT(vtr_abs_T({1.0, 1.0, 1.0}, grid64()), WithinAbs(1.5745972, 1e-5));
  CHECK_THAT(vtr_abs_T({2.0, 0.0, 0.0}, grid64()), WithinAbs(2.0, 1e-13));
  CHECK_THAT(vtr_abs_T({0.0, 0.0, 0.5}, grid64()), WithinAbs(0.5, 1e-13));
}

TEST_CASE("pristine trace agrees between the folded and the 2-atom zone", "[energy]") {
  CHECK_THAT(vtr_abs_H(grid64()), WithinAbs(vtr_abs_H(grid64_b2()), 1e-6));
}

TEST_CASE("elastic energy", "[energy]") {
  CHECK(elastic_energy({1.0, 1.0, 1.0}, 3.0) == 0.0);
  CHECK_THAT(elastic_energy({2.0, 1.0, 0.0}, 1.0), WithinAbs(0.5, 1e-15));
  CHECK_THAT(elastic_energy({0.0, 0.0, 0.0}, 2.0), WithinAbs(1.5, 1e-15));
}

TEST_CASE("total energy breakdown", "[energy]") {
  const EnergyBreakdown eb = total_energy({0.9, 1.1, 1.3}, 0.7, grid64());
  CHECK(eb.quantum <= 0.0);
  CHECK(eb.elastic >= 0.0);
  CHECK_THAT(eb.total, WithinAbs(eb.quantum + eb.elastic, 1e-15));
  CHECK(eb.gridN == 64);
  CHECK(eb.quadError >= 0.0);
  CHECK(eb.quadError < 1e-3);
  CHECK_THROWS_AS(total_energy({1.0, 1.0, 1.0}, 0.0, grid64()), std::invalid_argument);
  CHECK_THROWS_AS(total_energy({1.0, 1.0, 1.0}, 1.0, grid64_b2()), std::invalid_argument);
}

TEST_CASE("refinement error shrinks as the grid is refined", "[energy]") {
  const HoppingTriple c{0.8, 1.0, 1.2};
  const double e32 = total_energy(c, 1.0, make_grid(Zone::B6, 32)).quadError;
  const double e128 = total_energy(c, 1.0, make_grid(Zone::B6, 128)).quadError;
  CHECK(e128 < e32);
}

TEST_CASE("cached quantum term equals the direct average", "[energy]") {
  testing::Random rng(41);
  for (std::array<double, 2> shift : {std::array<double, 2>{0.5, 0.5}, std::array<double, 2>{0.0, 0.0},
                                      std::array<double, 2>{0.25, 0.1}, std::array<double, 2>{0.0, 0.5}}) {
    for (int n : {7, 16}) {
      const QuadratureGrid g = make_grid(Zone::B6, n, shift);
      const QuantumTerm q(g);
      for (int i = 0; i < 10; ++i) {
        const HoppingTriple c = rng.triple(-1.0, 2.0);
        CHECK_THAT(q.vtr_abs_T(c), WithinAbs(vtr_abs_T(c, g), 1e-13));
      }
    }
  }
  CHECK_THROWS_AS(QuantumTerm(grid64_b2()), std::invalid_argument);
}

TEST_CASE("energy is invariant under permutations and a global sign", "[energy]") {
  testing::Random rng(42);
  const QuantumTerm q(make_grid(Zone::B6, 32));
  for (int i = 0; i < 20; ++i) {
    const HoppingTriple c = rng.triple(0.0, 2.0);
    const double base = q.vtr_abs_T(c);
    CHECK_THAT(q.vtr_abs_T({c.u, c.v, c.t}), WithinAbs(base, 1e-12));
    CHECK_THAT(q.vtr_abs_T({c.v, c.t, c.u}), WithinAbs(base, 1e-12));
    CHECK_THAT(q.vtr_abs_T({c.u, c.t, c.v}), WithinAbs(base, 1e-12));
    CHECK_THAT(q.vtr_abs_T(c.scaled(-1.0)), WithinAbs(base, 1e-12));
    CHECK_THAT(q.vtr_abs_T(c.scaled(2.5)), WithinAbs(2.5 * base, 1e-12));
  }
}

TEST_CASE("pristine optimum", "[energy]") {
  const double vh = vtr_abs_H(grid64());
  CHECK_THAT(pristine_optimum(1.0, grid64()), WithinAbs(2.04973, 1e-4));
  for (double mu : {0.3, 1.0, 7.0}) {
    CHECK_THAT((pristine_optimum(mu, grid64()) - 1.0) * mu, WithinAbs(2.0 / 3.0 * vh, 1e-13));
  }
  CHECK_THAT(pristine_optimum(1e6, grid64()), WithinAbs(1.0, 1e-5));
  CHECK_THROWS_AS(pristine_optimum(-1.0, grid64()), std::invalid_argument);

  // Stationarity along the pristine line.
  const QuantumTerm q(grid64());
  const double mu = 1.3;
  const double ts = pristine_optimum(mu, grid64());
  const double h = 1e-4;
  auto e = [&](double t) { return energy_value({t, t, t}, mu, q); };
  CHECK(std::abs((e(ts + h) - e(ts - h)) / (2 * h)) < 1e-8);
  CHECK(e(ts) < e(ts + 0.01));
  CHECK(e(ts) < e(ts - 0.01));
}

TEST_CASE("generalized model with the quadratic elastic energy", "[energy]") {
  const ElasticModel quad = ElasticModel::quadratic();
  for (double mu : {0.5, 1.0, 2.0}) {
    CHECK_THAT(generalized_pristine_optimum(quad, mu, grid64()), WithinAbs(pristine_optimum(mu, grid64()), 1e-8));
  }
  // For F = (x - 1)^2 the margin condition reads mu = avg(3/m - m) / t*(mu).
  const double bound = generalized_critical_mu_bound(quad, make_grid(Zone::B2, 256));
  CHECK(bound > 0.0);
  CHECK(bound <= 1.114 + 0.01);
  const double doubled = generalized_critical_mu_bound(quad.scaled(2.0), make_grid(Zone::B2, 256));
  CHECK(doubled < bound);
}

TEST_CASE("generalized model with a quartic correction", "[energy]") {
  const ElasticModel quartic = ElasticModel::custom(
      [](double x) { return (x - 1.0) * (x - 1.0) + std::pow(x - 1.0, 4); },
      [](double x) { return 2.0 * (x - 1.0) + 4.0 * std::pow(x - 1.0, 3); }, 1.0, 1.0);
  const QuadratureGrid g = make_grid(Zone::B6, 128);
  const double ts = generalized_pristine_optimum(quartic, 1.0, g);
  CHECK_THAT(ts, WithinAbs(1.6055757, 1e-5));
  const double target = 4.0 / 3.0 * vtr_abs_H(g);
  CHECK_THAT(quartic.Fprime(ts), WithinAbs(target, 1e-8));
  CHECK(ts < pristine_optimum(1.0, g));
  CHECK_THAT(generalized_pristine_optimum(quartic, 1e6, g), WithinAbs(1.0, 1e-5));
}

TEST_CASE("generalized model validation", "[energy]") {
  auto f = [](double x) { return (x - 1.0) * (x - 1.0); };
  auto fp = [](double x) { return 2.0 * (x - 1.0); };
  CHECK_THROWS_AS(ElasticModel::custom(f, fp, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ElasticModel::custom(f, fp, 1.0, -1.0), std::invalid_argument);
  // Minimum on the negative axis: F(t) < F(|t|) for t < 0.
  CHECK_THROWS_AS(ElasticModel::custom([](double x) { return (x + 1.0) * (x + 1.0); },
                                       [](double x) { return 2.0 * (x + 1.0); }, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(ElasticModel::quadratic().scaled(0.0), std::invalid_argument);
  // F' bounded: the Euler-Lagrange target is never reached for small mu.
  const ElasticModel flat = ElasticModel::custom([](double x) { return std::sqrt(1.0 + (x - 1.0) * (x - 1.0)); },
                                                 [](double x) { return (x - 1.0) / std::sqrt(1.0 + (x - 1.0) * (x - 1.0)); },
                                                 0.1, 1.0);
  CHECK_THROWS_AS(generalized_pristine_optimum(flat, 0.1, grid64()), NumericalFailure);
}

TEST_CASE("per-atom quantum energy carries a sixth of the per-cell Hessian", "[energy]") {
  const QuantumTerm q(make_grid(Zone::B6, 256));
  const double h = 1e-3;
  auto eq = [&](double a, double b) { return -q.vtr_abs_T({a, b, b}); };
  const double coeff = (eq(1.0 + 2 * h, 1.0 - h) + eq(1.0 - 2 * h, 1.0 + h) - 2.0 * eq(1.0, 1.0)) / (2.0 * h * h);
  CHECK(coeff < 0.0);
  CHECK_THAT(coeff, WithinRel(-hessian_coefficient(1.0, q.grid()) / 6.0, 1e-2));
  // Elastic part: (mu/4)(4 + 1 + 1) h^2 = 1.5 mu h^2.
  const double mu = 0.8;
  const double el = (elastic_energy({1.0 + 2 * h, 1.0 - h, 1.0 - h}, mu)) / (h * h);
  CHECK_THAT(el, WithinRel(1.5 * mu, 1e-12));
}
