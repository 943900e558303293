#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "kekulattice/lattice.hpp"

namespace kekulattice {

/// Bloch matrix of the Kagome lattice (line graph of the honeycomb),
///
///   2 | 0              cos(a1.k/2)        cos(a2.k/2)       |
///     | cos(a1.k/2)    0                  cos((a1-a2).k/2)  |
///     | cos(a2.k/2)    cos((a1-a2).k/2)   0                 |
Eigen::Matrix3d kagome_bloch(const Vec2& k);

/// Spectrum of kagome_bloch(k): the flat band -2 and
/// lambda_pm = 1 -/+ sqrt(3 + 2cos(a1.k) + 2cos(a2.k) + 2cos((a1-a2).k)).
struct KagomeBands {
  Vec2 k = Vec2::Zero();
  double flat = -2.0;
  double lower = 0.0;
  double upper = 0.0;
};

KagomeBands kagome_bands(const Vec2& k);

// Sites per L x L periodic supercell: three per 2-atom cell.
inline int kagome_site_count(int L) { return 3 * L * L; }

// Site index of sublattice s in {0, 1, 2} of cell (i, j), i.e. the bond of
// family s attached to R = i a1 + j a2.
int kagome_site_index(int i, int j, int s, int L);

// Bond midpoints: R, R + a1/2, R + a2/2 for s = 0, 1, 2.
Vec2 kagome_site_position(int i, int j, int s);

// Adjacency of the L x L periodic Kagome lattice (1 <= L <= 8). Two bonds are
// adjacent when they share a honeycomb site; for L = 1 repeated pairs add up.
Eigen::MatrixXd kagome_adjacency(int L);

// Localized flat-band mode: +1, -1 alternating around the hexagon centred at
// (a1 + a2)/2 and zero elsewhere. Needs L >= 3 so the six sites are distinct.
std::vector<double> kagome_hexagon_mode(int L);

struct NeighborBound {
  bool pass = false;
  double neighborSum = 0.0;  // sum over adjacent bond pairs of h_i h_j = (1/2) <h, A h>
  double floor = 0.0;        // -sum h_i^2
};

// Checks sum_{adjacent} h_i h_j >= -sum h_i^2 (up to 1e-12 relative slack).
// Throws std::invalid_argument unless h.size() == 3 L^2.
NeighborBound neighbor_quadratic_bound(std::span<const double> h, int L);

}  // namespace kekulattice
