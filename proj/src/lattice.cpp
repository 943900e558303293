#include "kekulattice/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

#include "kekulattice/parallel.hpp"

namespace kekulattice {

namespace {

double cross(const Vec2& x, const Vec2& y) { return x.x() * y.y() - x.y() * y.x(); }

// Rows of 2 pi M^{-T} for M = [x1; x2].
std::array<Vec2, 2> dual_pair(const Vec2& x1, const Vec2& x2) {
  Eigen::Matrix2d m;
  m.row(0) = x1.transpose();
  m.row(1) = x2.transpose();
  const Eigen::Matrix2d d = 2.0 * std::numbers::pi * m.inverse().transpose();
  return {Vec2(d.row(0).transpose()), Vec2(d.row(1).transpose())};
}

}  // namespace

LatticeBasis build_basis() {
  LatticeBasis lb;
  const double h = std::sqrt(3.0) / 2.0;
  lb.a1 = Vec2(h, 0.5);
  lb.a2 = Vec2(h, -0.5);
  lb.b1 = 2.0 * lb.a1 - lb.a2;
  lb.b2 = 2.0 * lb.a2 - lb.a1;
  const auto ad = dual_pair(lb.a1, lb.a2);
  const auto bd = dual_pair(lb.b1, lb.b2);
  lb.a1s = ad[0];
  lb.a2s = ad[1];
  lb.b1s = bd[0];
  lb.b2s = bd[1];
  lb.cellArea2 = std::abs(cross(lb.a1, lb.a2));
  lb.cellArea6 = std::abs(cross(lb.b1, lb.b2));
  return lb;
}

const LatticeBasis& basis() {
  static const LatticeBasis instance = build_basis();
  return instance;
}

std::string_view zone_name(Zone zone) { return zone == Zone::B2 ? "B2" : "B6"; }

double zone_area(Zone zone) {
  const auto& lb = basis();
  const double cell = zone == Zone::B2 ? lb.cellArea2 : lb.cellArea6;
  return 4.0 * std::numbers::pi * std::numbers::pi / cell;
}

std::array<Vec2, 2> reciprocal_basis(Zone zone) {
  const auto& lb = basis();
  if (zone == Zone::B2) {
    return {lb.a1s, lb.a2s};
  }
  return {lb.b1s, lb.b2s};
}

std::array<double, 2> to_reduced(Zone zone, const Vec2& k) {
  // k = r1 g1 + r2 g2 and x_i . g_j = 2 pi delta_ij for the real-space pair.
  const auto& lb = basis();
  const Vec2& x1 = zone == Zone::B2 ? lb.a1 : lb.b1;
  const Vec2& x2 = zone == Zone::B2 ? lb.a2 : lb.b2;
  const double inv = 1.0 / (2.0 * std::numbers::pi);
  return {k.dot(x1) * inv, k.dot(x2) * inv};
}

double reduced_distance_to_origin(const std::array<double, 2>& r) {
  const double d0 = r[0] - std::round(r[0]);
  const double d1 = r[1] - std::round(r[1]);
  return std::hypot(d0, d1);
}

std::array<double, 2> QuadratureGrid::reduced(std::size_t idx) const {
  const auto i = static_cast<int>(idx / static_cast<std::size_t>(n));
  const auto j = static_cast<int>(idx % static_cast<std::size_t>(n));
  return {(i + shift[0]) / n, (j + shift[1]) / n};
}

QuadratureGrid make_grid(Zone zone, int n, std::array<double, 2> shift) {
  if (n < 2) {
    throw std::invalid_argument("make_grid: n must be at least 2, got " + std::to_string(n));
  }
  for (double s : shift) {
    if (!(s >= 0.0 && s < 1.0)) {
      throw std::invalid_argument("make_grid: shift components must lie in [0, 1)");
    }
  }
  QuadratureGrid grid;
  grid.zone = zone;
  grid.n = n;
  grid.shift = shift;
  grid.weight = 1.0 / (static_cast<double>(n) * n);
  const auto [g1, g2] = reciprocal_basis(zone);
  grid.points.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double r1 = (i + shift[0]) / n;
    for (int j = 0; j < n; ++j) {
      const double r2 = (j + shift[1]) / n;
      grid.points.emplace_back(r1 * g1 + r2 * g2);
    }
  }
  return grid;
}

double grid_average(const QuadratureGrid& grid, const std::function<double(const Vec2&)>& f) {
  return grid.weight * block_sum(grid.size(), [&](std::size_t i) { return f(grid.points[i]); });
}

}  // namespace kekulattice
