#include "kekulattice/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kekulattice {

namespace {

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

BandSet from_positive(const Vec2& k, std::array<double, 3> pos) {
  std::sort(pos.begin(), pos.end());
  BandSet bs;
  bs.k = k;
  for (int i = 0; i < 3; ++i) {
    bs.values[static_cast<std::size_t>(i)] = -pos[static_cast<std::size_t>(2 - i)];
    bs.values[static_cast<std::size_t>(3 + i)] = pos[static_cast<std::size_t>(i)];
  }
  return bs;
}

}  // namespace

double HoppingTriple::spread() const {
  const double e = mean();
  const double var = ((t - e) * (t - e) + (u - e) * (u - e) + (v - e) * (v - e)) / 3.0;
  return std::sqrt(var);
}

double HoppingTriple::norm() const { return std::sqrt(t * t + u * u + v * v); }

HoppingTriple HoppingTriple::sorted() const {
  auto x = values();
  std::sort(x.begin(), x.end());
  return {x[0], x[1], x[2]};
}

BlochPhases bloch_phases(const Vec2& k) {
  const auto& lb = basis();
  return {phase(-k.dot(lb.b1)), phase(-k.dot(lb.b2))};
}

Mat3c bloch_A(const HoppingTriple& cfg, const BlochPhases& ph) {
  const Complex e12 = std::conj(ph.e1 * ph.e2);  // exp(i k.(b1 + b2))
  Mat3c a;
  a << cfg.t, cfg.v * ph.e1, cfg.u,
       cfg.u, cfg.t, cfg.v * e12,
       cfg.v * ph.e2, cfg.u, cfg.t;
  return a;
}

Mat3c bloch_A(const HoppingTriple& cfg, const Vec2& k) { return bloch_A(cfg, bloch_phases(k)); }

BlochMatrix bloch_T(const HoppingTriple& cfg, const Vec2& k) {
  BlochMatrix bm;
  bm.k = k;
  bm.A = bloch_A(cfg, k);
  bm.T.setZero();
  bm.T.topRightCorner<3, 3>() = bm.A;
  bm.T.bottomLeftCorner<3, 3>() = bm.A.adjoint();
  return bm;
}

HopComponents hop_components(const Vec2& k) {
  return {bloch_T({1.0, 0.0, 0.0}, k).T, bloch_T({0.0, 1.0, 0.0}, k).T,
          bloch_T({0.0, 0.0, 1.0}, k).T};
}

Complex pristine_factor(const Vec2& k) {
  const auto& lb = basis();
  return 1.0 + phase(k.dot(lb.a1)) + phase(k.dot(lb.a2));
}

double dispersion_m(const Vec2& k) { return std::abs(pristine_factor(k)); }

BandSet bands(const HoppingTriple& cfg, const Vec2& k) {
  return from_positive(k, singular_values3(bloch_A(cfg, k)));
}

BandSet folded_bands(double t, const Vec2& k) {
  const auto& lb = basis();
  const double at = std::abs(t);
  return from_positive(
      k, {at * dispersion_m(k), at * dispersion_m(k + lb.b1s), at * dispersion_m(k + lb.b2s)});
}

double singular_value_sum(const HoppingTriple& cfg, const BlochPhases& ph) {
  const auto s = singular_values3(bloch_A(cfg, ph));
  return s[0] + s[1] + s[2];
}

SpectralBounds spectral_bounds(const HoppingTriple& cfg) {
  if (cfg.t < 0.0 || cfg.u < 0.0 || cfg.v < 0.0) {
    throw std::invalid_argument("spectral_bounds: amplitudes must be non-negative");
  }
  return {3.0 * cfg.spread() / std::sqrt(2.0), 3.0 * cfg.mean()};
}

}  // namespace kekulattice
