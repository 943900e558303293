#include <algorithm>
#include <cmath>
#include <vector>

#include "support.hpp"

#include "kekulattice/kagome.hpp"

using namespace kekulattice;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> bloch_spectrum(int L) {
  const auto& lb = basis();
  std::vector<double> out;
  for (int m1 = 0; m1 < L; ++m1) {
    for (int m2 = 0; m2 < L; ++m2) {
      const Vec2 k = (double(m1) / L) * lb.a1s + (double(m2) / L) * lb.a2s;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(kagome_bloch(k), Eigen::EigenvaluesOnly);
      for (int i = 0; i < 3; ++i) {
        out.push_back(es.eigenvalues()[i]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> real_space_spectrum(int L) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kagome_adjacency(L), Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Kagome Bloch matrix at the zone centre", "[kagome]") {
  const KagomeBands b = kagome_bands(Vec2::Zero());
  CHECK_THAT(b.flat, WithinAbs(-2.0, 1e-15));
  CHECK_THAT(b.lower, WithinAbs(-2.0, 1e-14));
  CHECK_THAT(b.upper, WithinAbs(4.0, 1e-14));
  const Eigen::Matrix3d m = kagome_bloch(Vec2::Zero());
  CHECK(m.trace() == 0.0);
  CHECK((m - Eigen::Matrix3d::Constant(2.0) + 2.0 * Eigen::Matrix3d::Identity()).norm() < 1e-15);
}

TEST_CASE("Kagome bands match dense diagonalization", "[kagome]") {
  testing::Random rng(61);
  for (int i = 0; i < 500; ++i) {
    const Vec2 k = rng.k_b2();
    const Eigen::Matrix3d m = kagome_bloch(k);
    CHECK((m - m.transpose()).norm() == 0.0);
    CHECK(std::abs(m.trace()) < 1e-15);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m, Eigen::EigenvaluesOnly);
    std::array<double, 3> closed{kagome_bands(k).flat, kagome_bands(k).lower, kagome_bands(k).upper};
    std::sort(closed.begin(), closed.end());
    for (int j = 0; j < 3; ++j) {
      CHECK_THAT(closed[static_cast<std::size_t>(j)], WithinAbs(es.eigenvalues()[j], 1e-12));
    }
  }
}

TEST_CASE("flat band at -2 is the bottom of the spectrum", "[kagome]") {
  testing::Random rng(62);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Matrix3d m = kagome_bloch(rng.k_b2()) + 2.0 * Eigen::Matrix3d::Identity();
    CHECK(std::abs(m.determinant()) < 1e-12);
  }
  const auto& lb = basis();
  const int n = 64;
  double lo = 1e300;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vec2 k = (double(i) / n) * lb.a1s + (double(j) / n) * lb.a2s;
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(kagome_bloch(k), Eigen::EigenvaluesOnly);
      lo = std::min(lo, es.eigenvalues()[0]);
    }
  }
  CHECK_THAT(lo, WithinAbs(-2.0, 1e-9));
}

TEST_CASE("band ranges of the dispersive bands", "[kagome]") {
  const auto& lb = basis();
  const int n = 129;  // divisible by 3, so K is sampled
  double lowMin = 1e300, lowMax = -1e300, upMin = 1e300, upMax = -1e300;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const KagomeBands b = kagome_bands((double(i) / n) * lb.a1s + (double(j) / n) * lb.a2s);
      lowMin = std::min(lowMin, b.lower);
      lowMax = std::max(lowMax, b.lower);
      upMin = std::min(upMin, b.upper);
      upMax = std::max(upMax, b.upper);
    }
  }
  CHECK_THAT(lowMin, WithinAbs(-2.0, 1e-3));
  CHECK_THAT(lowMax, WithinAbs(1.0, 1e-3));
  CHECK_THAT(upMin, WithinAbs(1.0, 1e-3));
  CHECK_THAT(upMax, WithinAbs(4.0, 1e-3));
}

TEST_CASE("site indexing", "[kagome]") {
  CHECK(kagome_site_count(3) == 27);
  CHECK(kagome_site_index(0, 0, 0, 3) == kagome_site_index(3, -3, 0, 3));
  CHECK(kagome_site_index(-1, 2, 1, 4) == kagome_site_index(3, 2, 1, 4));
  const auto& lb = basis();
  CHECK((kagome_site_position(1, 0, 1) - (1.5 * lb.a1)).norm() < 1e-15);
  CHECK((kagome_site_position(0, 2, 2) - (2.5 * lb.a2)).norm() < 1e-15);
}

TEST_CASE("real-space adjacency reproduces the Bloch spectrum", "[kagome]") {
  for (int L : {2, 3, 4}) {
    const Eigen::MatrixXd a = kagome_adjacency(L);
    CHECK(a.rows() == kagome_site_count(L));
    CHECK((a - a.transpose()).norm() == 0.0);
    CHECK((a.rowwise().sum().array() == 4.0).all());
    const auto real = real_space_spectrum(L);
    const auto bloch = bloch_spectrum(L);
    REQUIRE(real.size() == bloch.size());
    for (std::size_t i = 0; i < real.size(); ++i) {
      CHECK_THAT(real[i], WithinAbs(bloch[i], 1e-8));
    }
  }
}

TEST_CASE("adjacency of the 1 x 1 cell counts repeated bonds", "[kagome]") {
  const Eigen::MatrixXd a = kagome_adjacency(1);
  CHECK(a.rows() == 3);
  CHECK(a(0, 1) == 2.0);
  CHECK(a(0, 2) == 2.0);
  CHECK(a(1, 2) == 2.0);
  CHECK(a.diagonal().isZero());
  CHECK_THROWS_AS(kagome_adjacency(0), std::invalid_argument);
  CHECK_THROWS_AS(kagome_adjacency(9), std::invalid_argument);
}

TEST_CASE("neighbour quadratic bound", "[kagome]") {
  const int L = 2;
  std::vector<double> ones(static_cast<std::size_t>(kagome_site_count(L)), 1.5);
  const NeighborBound c = neighbor_quadratic_bound(ones, L);
  CHECK(c.pass);
  CHECK_THAT(c.neighborSum, WithinAbs(2.0 * 1.5 * 1.5 * 12, 1e-12));

  const auto mode = kagome_hexagon_mode(3);
  CHECK(std::count_if(mode.begin(), mode.end(), [](double x) { return x != 0.0; }) == 6);
  const NeighborBound m = neighbor_quadratic_bound(mode, 3);
  CHECK(m.pass);
  CHECK_THAT(m.neighborSum, WithinAbs(m.floor, 1e-12));
  CHECK_THAT(m.floor, WithinAbs(-6.0, 1e-15));
  // The mode is an eigenvector of the adjacency with eigenvalue -2.
  const Eigen::Map<const Eigen::VectorXd> v(mode.data(), static_cast<Eigen::Index>(mode.size()));
  CHECK((kagome_adjacency(3) * v + 2.0 * v).norm() < 1e-12);
  CHECK_THROWS_AS(kagome_hexagon_mode(2), std::invalid_argument);

  testing::Random rng(63);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.integer(2, 5);
    std::vector<double> h(static_cast<std::size_t>(kagome_site_count(n)));
    for (auto& x : h) {
      x = rng.uniform(-1.0, 1.0);
    }
    CHECK(neighbor_quadratic_bound(h, n).pass);
  }
  CHECK_THROWS_AS(neighbor_quadratic_bound(ones, 3), std::invalid_argument);
}
