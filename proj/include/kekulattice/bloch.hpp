#pragma once

#include <array>

#include <Eigen/Core>

#include "kekulattice/lattice.hpp"
#include "kekulattice/small_eigen.hpp"

namespace kekulattice {

using Mat6c = Eigen::Matrix<Complex, 6, 6>;

/// Hopping amplitudes (t, u, v) of the three bond families of the 6-atom cell.
struct HoppingTriple {
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;

  // E: arithmetic mean.
  double mean() const { return (t + u + v) / 3.0; }
  // s: population standard deviation, s^2 = (1/3) sum (x - E)^2.
  double spread() const;
  // S: Euclidean norm sqrt(t^2 + u^2 + v^2).
  double norm() const;
  // W = tuv.
  double product() const { return t * u * v; }

  std::array<double, 3> values() const { return {t, u, v}; }
  HoppingTriple sorted() const;
  HoppingTriple scaled(double factor) const { return {factor * t, factor * u, factor * v}; }

  friend bool operator==(const HoppingTriple&, const HoppingTriple&) = default;
};

/// Per-k phases used by A(k): e1 = exp(-i k.b1), e2 = exp(-i k.b2).
struct BlochPhases {
  Complex e1;
  Complex e2;
};

BlochPhases bloch_phases(const Vec2& k);

// A(k) with the column convention of the 6-atom cell labelling: row/column
// order (1,2,3) for the first sublattice and (4,5,6) for the second.
//
//   | t             v e^{-ik.b1}     u                 |
//   | u             t                v e^{ik.(b1+b2)}  |
//   | v e^{-ik.b2}  u                t                 |
Mat3c bloch_A(const HoppingTriple& cfg, const Vec2& k);
Mat3c bloch_A(const HoppingTriple& cfg, const BlochPhases& ph);

struct BlochMatrix {
  Vec2 k;
  Mat3c A;
  Mat6c T;  // [[0, A], [A*, 0]]
};

BlochMatrix bloch_T(const HoppingTriple& cfg, const Vec2& k);

// S1 = T(1,0,0), S2 = T(0,1,0), S3 = T(0,0,1) at k.
struct HopComponents {
  Mat6c S1;
  Mat6c S2;
  Mat6c S3;
};

HopComponents hop_components(const Vec2& k);

// 1 + e^{ik.a1} + e^{ik.a2}; its modulus is the pristine dispersion m(k).
Complex pristine_factor(const Vec2& k);

double dispersion_m(const Vec2& k);

/// The six eigenvalues of T(k), ascending and antisymmetric (values[i] = -values[5-i]).
struct BandSet {
  Vec2 k;
  std::array<double, 6> values{};
};

// Bands as +/- the singular values of A(k).
BandSet bands(const HoppingTriple& cfg, const Vec2& k);

// Pristine bands from folding m(k), m(k + b1*), m(k + b2*) of the 2-atom zone.
BandSet folded_bands(double t, const Vec2& k);

// Sum of the singular values of A(k), i.e. (1/2) Tr |T(k)|.
double singular_value_sum(const HoppingTriple& cfg, const BlochPhases& ph);

/// Band edges of |T|: the spectrum of T is [-b, -a] U [a, b].
struct SpectralBounds {
  double a = 0.0;  // 3 s / sqrt(2), half the gap
  double b = 0.0;  // 3 E
};

// Requires t, u, v >= 0.
SpectralBounds spectral_bounds(const HoppingTriple& cfg);

}  // namespace kekulattice
