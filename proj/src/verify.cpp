#include "kekulattice/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "kekulattice/bloch.hpp"
#include "kekulattice/energy.hpp"
#include "kekulattice/kagome.hpp"
#include "kekulattice/lattice.hpp"
#include "kekulattice/perturbation.hpp"
#include "kekulattice/sympoly.hpp"

namespace kekulattice {

bool VerifyReport::all_pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass; });
}

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  HoppingTriple triple(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }

  // Uniform point of the B6 cell.
  Vec2 k_b6() {
    const auto& lb = basis();
    return uniform(0.0, 1.0) * lb.b1s + uniform(0.0, 1.0) * lb.b2s;
  }

 private:
  std::mt19937_64 rng_;
};

// Smallest of m at the folded points k, k + b1*, k + b2*.
double min_folded_m(const Vec2& k) {
  const auto& lb = basis();
  return std::min({dispersion_m(k), dispersion_m(k + lb.b1s), dispersion_m(k + lb.b2s)});
}

Eigen::Vector3d dense_singular_values(const Mat3c& a) {
  Eigen::JacobiSVD<Mat3c> svd(a);
  Eigen::Vector3d s = svd.singularValues();
  std::sort(s.data(), s.data() + 3);
  return s;
}

double half_trace_abs(const Mat6c& m) {
  Eigen::SelfAdjointEigenSolver<Mat6c> es(m, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

SuiteResult spectral_bounds_suite(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const HoppingTriple cfg = rng.triple(0.0, 2.0);
    const SpectralBounds sb = spectral_bounds(cfg);
    const Eigen::Vector3d s = dense_singular_values(bloch_A(cfg, Vec2::Zero()));
    worst = std::max({worst, std::abs(s[0] - sb.a), std::abs(s[2] - sb.b)});
  }
  double gap_violation = 0.0;
  const QuadratureGrid grid = make_grid(Zone::B6, 16, {0.0, 0.0});
  for (int i = 0; i < 10; ++i) {
    const HoppingTriple cfg = rng.triple(0.0, 2.0);
    const double a = spectral_bounds(cfg).a;
    for (const auto& k : grid.points) {
      const double smin = dense_singular_values(bloch_A(cfg, k))[0];
      gap_violation = std::max(gap_violation, a - smin);
    }
  }
  const bool pass = worst <= 1e-9 && gap_violation <= 1e-8;
  return {"spectral-bounds", pass,
          "max |edge error| " + sci(worst) + ", max gap violation " + sci(std::max(gap_violation, 0.0))};
}

SuiteResult omega_suite(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const HopComponents hc = hop_components(rng.k_b6());
    const std::array<const Mat6c*, 3> s{&hc.S1, &hc.S2, &hc.S3};
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const Mat6c omega = *s[p] * *s[q] + *s[q] * *s[p];
        Eigen::SelfAdjointEigenSolver<Mat6c> es(omega, Eigen::EigenvaluesOnly);
        for (double ev : es.eigenvalues()) {
          worst = std::max(worst, std::min(std::abs(ev + 1.0), std::abs(ev - 2.0)));
        }
      }
    }
  }
  return {"omega-containment", worst <= 1e-9, "max distance to {-1, 2} " + sci(worst)};
}

SuiteResult flat_band_suite() {
  double min_ev = 1e300;
  const int n = 64;
  const auto& lb = basis();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec2 k = (double(i) / n) * lb.a1s + (double(j) / n) * lb.a2s;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(kagome_bloch(k), Eigen::EigenvaluesOnly);
      min_ev = std::min(min_ev, es.eigenvalues()[0]);
    }
  }
  const int L = 3;
  const auto h = kagome_hexagon_mode(L);
  const NeighborBound nb = neighbor_quadratic_bound(h, L);
  const double mode_gap = std::abs(nb.neighborSum - nb.floor);
  const bool pass = std::abs(min_ev + 2.0) <= 1e-9 && nb.pass && mode_gap <= 1e-10;
  return {"flat-band", pass,
          "min eigenvalue + 2 = " + sci(min_ev + 2.0) + ", hexagon mode slack " + sci(mode_gap)};
}

SuiteResult projection_suite(Sampler& rng, int gridN) {
  const QuantumTerm quantum(make_grid(Zone::B6, gridN));
  double worst = -1e300;
  int cases = 0;
  for (double mu : {0.3, 1.0, 3.0}) {
    for (int i = 0; i < 20; ++i) {
      const HoppingTriple cfg = rng.triple(0.0, 2.5);
      const HoppingTriple proj = kekule_projection(cfg).triple();
      const double diff = energy_value(proj, mu, quantum) - energy_value(cfg, mu, quantum);
      worst = std::max(worst, diff);
      ++cases;
    }
  }
  return {"projection-dominance", worst <= 1e-9,
          std::to_string(cases) + " cases, max E(projection) - E(input) " + sci(worst)};
}

SuiteResult quartic_suite(Sampler& rng) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const HoppingTriple cfg = rng.triple(-2.0, 2.0);
    const Vec2 k = rng.k_b6();
    const double g = g_from_quartic(charpoly_coeffs(cfg, k));
    const double ref = dense_singular_values(bloch_A(cfg, k)).sum();
    worst = std::max(worst, std::abs(g - ref));
  }
  return {"quartic-consistency", worst <= 1e-8, "max |g - sum sigma| " + sci(worst)};
}

SuiteResult hessian_suite(Sampler& rng, int gridN) {
  double worst = 0.0;
  int checked = 0;
  const double eta = 1e-3;
  while (checked < 20) {
    const Vec2 k = rng.k_b6();
    if (min_folded_m(k) < 0.3) {
      continue;
    }
    const BlochMatrix h = bloch_T({1.0, 1.0, 1.0}, k);
    const Mat6c s1 = hop_components(k).S1;
    const double second = half_trace_abs(h.T + eta * s1) + half_trace_abs(h.T - eta * s1) - 2.0 * half_trace_abs(h.T);
    const double oracle = 9.0 * second / (eta * eta);
    const double c = c_of_k(k);
    worst = std::max(worst, std::abs(c - oracle) / std::abs(oracle));
    ++checked;
  }

  // Global second difference of the per-cell quantum energy, 6 (-VTr|T|).
  const QuadratureGrid grid = make_grid(Zone::B6, gridN);
  const QuantumTerm quantum(grid);
  const double t = 1.0;
  const double step = 1e-3;
  auto eq = [&](double a, double b) { return -6.0 * quantum.vtr_abs_T({a, b, b}); };
  const double fd = (eq(t + 2 * step, t - step) + eq(t - 2 * step, t + step) - 2.0 * eq(t, t)) / (2.0 * step * step);
  const double predicted = -hessian_coefficient(t, grid);
  const double global = std::abs(fd - predicted) / std::abs(predicted);
  const bool pass = worst <= 1e-3 && global <= 1e-2;
  return {"hessian-oracle", pass, "max pointwise relative error " + sci(worst) + ", global " + sci(global)};
}

SuiteResult ztilde_suite(Sampler& rng, bool fault) {
  double min_re = 1e300;
  double identity = 0.0;
  for (int i = 0; i < 200; ++i) {
    ZFactor zf = z_factor(rng.k_b6());
    if (fault) {
      zf.zTilde = -zf.zTilde;
    }
    min_re = std::min(min_re, zf.zTilde.real());
    identity = std::max(identity, std::abs(std::norm(zf.z) - (6.0 * zf.z.real() - 2.0 * zf.zTilde.real())));
  }
  const bool pass = min_re >= -1e-12 && identity <= 1e-10;
  return {"ztilde-positivity", pass, "min Re Zt " + sci(min_re) + ", |Z|^2 identity error " + sci(identity)};
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  Sampler rng(opts.seed);
  VerifyReport r;
  r.suites.push_back(spectral_bounds_suite(rng));
  r.suites.push_back(omega_suite(rng));
  r.suites.push_back(flat_band_suite());
  r.suites.push_back(projection_suite(rng, opts.gridN));
  r.suites.push_back(quartic_suite(rng));
  r.suites.push_back(hessian_suite(rng, opts.gridN));
  r.suites.push_back(ztilde_suite(rng, opts.injectZTildeFault));
  return r;
}

}  // namespace kekulattice
