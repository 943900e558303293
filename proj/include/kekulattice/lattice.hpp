#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace kekulattice {

using Vec2 = Eigen::Vector2d;

/// Honeycomb geometry in dimensionless lattice units.
///
/// a1, a2 span the triangular lattice of the 2-atom cell; b1 = 2a1 - a2 and
/// b2 = 2a2 - a1 span the 6-atom (Kekulé) supercell. The starred vectors are
/// the dual bases, x_i . x_j* = 2 pi delta_ij.
struct LatticeBasis {
  Vec2 a1, a2;
  Vec2 b1, b2;
  Vec2 a1s, a2s;
  Vec2 b1s, b2s;
  double cellArea2 = 0.0;  // |a1 x a2|
  double cellArea6 = 0.0;  // |b1 x b2|
};

LatticeBasis build_basis();

// Shared immutable instance of build_basis().
const LatticeBasis& basis();

enum class Zone { B2, B6 };

std::string_view zone_name(Zone zone);

// Area of the Brillouin zone, (2 pi)^2 / cell area.
double zone_area(Zone zone);

/// Uniform periodic grid on a Brillouin zone, stored in Cartesian coordinates.
///
/// Point (i, j) is ((i + shift[0]) / n) g1 + ((j + shift[1]) / n) g2 with
/// (g1, g2) the reciprocal basis of the zone; every point carries the weight
/// 1/n^2 so that summing weight * f realizes the normalized zone average.
struct QuadratureGrid {
  Zone zone = Zone::B6;
  int n = 0;
  std::array<double, 2> shift{0.5, 0.5};
  std::vector<Vec2> points;
  double weight = 0.0;

  std::size_t size() const { return points.size(); }

  // Reduced coordinates of point idx, in [0, 1)^2.
  std::array<double, 2> reduced(std::size_t idx) const;
};

inline constexpr std::array<double, 2> kDefaultShift{0.5, 0.5};

QuadratureGrid make_grid(Zone zone, int n, std::array<double, 2> shift = kDefaultShift);

// Reciprocal basis vectors (g1, g2) of a zone.
std::array<Vec2, 2> reciprocal_basis(Zone zone);

// Reduced coordinates of an arbitrary k with respect to the zone basis.
std::array<double, 2> to_reduced(Zone zone, const Vec2& k);

// Distance of reduced coordinates to the nearest lattice point (0 mod 1).
double reduced_distance_to_origin(const std::array<double, 2>& r);

// Normalized zone average of f over the grid, with the deterministic block
// reduction from parallel.hpp.
double grid_average(const QuadratureGrid& grid, const std::function<double(const Vec2&)>& f);

/// A grid-averaged value together with the refinement error |value(n) - value(n/2)|.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace kekulattice
