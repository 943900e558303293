#pragma once

// Independent reference computations for the tests: dense Eigen solvers and
// a finite-difference trace functional.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#ifdef KEKULATTICE_CATCH_AMALGAMATED
#include <catch_amalgamated.hpp>
#else
#include <catch2/catch_all.hpp>
#endif

#include "kekulattice/bloch.hpp"
#include "kekulattice/lattice.hpp"

namespace testing {

using namespace kekulattice;

inline std::array<double, 3> dense_singular_values(const Mat3c& a) {
  Eigen::JacobiSVD<Mat3c> svd(a);
  std::array<double, 3> s{svd.singularValues()[0], svd.singularValues()[1], svd.singularValues()[2]};
  std::sort(s.begin(), s.end());
  return s;
}

inline std::array<double, 6> dense_eigenvalues(const Mat6c& m) {
  Eigen::SelfAdjointEigenSolver<Mat6c> es(m, Eigen::EigenvaluesOnly);
  std::array<double, 6> out{};
  for (int i = 0; i < 6; ++i) {
    out[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
  }
  return out;
}

inline std::array<double, 3> dense_eigenvalues(const Mat3c& m) {
  Eigen::SelfAdjointEigenSolver<Mat3c> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues()[0], es.eigenvalues()[1], es.eigenvalues()[2]};
}

// (1/2) Tr |M| for Hermitian M.
inline double half_trace_abs(const Mat6c& m) {
  Eigen::SelfAdjointEigenSolver<Mat6c> es(m, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// Sum of the positive eigenvalues of Hermitian M.
inline double positive_part_trace(const Mat6c& m) {
  Eigen::SelfAdjointEigenSolver<Mat6c> es(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < 6; ++i) {
    s += std::max(es.eigenvalues()[i], 0.0);
  }
  return s;
}

// f(eta) = (1/2) Tr |H(k) + eta S1(k)| with H the pristine t = 1 operator.
inline double pristine_trace_along_s1(const Vec2& k, double eta) {
  const Mat6c h = bloch_T({1.0, 1.0, 1.0}, k).T;
  const Mat6c s1 = hop_components(k).S1;
  return half_trace_abs(h + eta * s1);
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  HoppingTriple triple(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }

  Vec2 k_b6() {
    const auto& lb = basis();
    return uniform(0.0, 1.0) * lb.b1s + uniform(0.0, 1.0) * lb.b2s;
  }

  Vec2 k_b2() {
    const auto& lb = basis();
    return uniform(0.0, 1.0) * lb.a1s + uniform(0.0, 1.0) * lb.a2s;
  }

 private:
  std::mt19937_64 rng_;
};

inline double min_folded_m(const Vec2& k) {
  const auto& lb = basis();
  return std::min({dispersion_m(k), dispersion_m(k + lb.b1s), dispersion_m(k + lb.b2s)});
}

}  // namespace testing
