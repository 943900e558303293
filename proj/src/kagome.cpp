#include "kekulattice/kagome.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace kekulattice {

Eigen::Matrix3d kagome_bloch(const Vec2& k) {
  const auto& lb = basis();
  const double c1 = 2.0 * std::cos(0.5 * lb.a1.dot(k));
  const double c2 = 2.0 * std::cos(0.5 * lb.a2.dot(k));
  const double c3 = 2.0 * std::cos(0.5 * (lb.a1 - lb.a2).dot(k));
  Eigen::Matrix3d m;
  m << 0.0, c1, c2,
       c1, 0.0, c3,
       c2, c3, 0.0;
  return m;
}

KagomeBands kagome_bands(const Vec2& k) {
  const auto& lb = basis();
  const double r = 3.0 + 2.0 * std::cos(lb.a1.dot(k)) + 2.0 * std::cos(lb.a2.dot(k)) +
                   2.0 * std::cos((lb.a1 - lb.a2).dot(k));
  const double root = std::sqrt(std::max(r, 0.0));
  KagomeBands b;
  b.k = k;
  b.flat = -2.0;
  b.lower = 1.0 - root;
  b.upper = 1.0 + root;
  return b;
}

namespace {

void require_size(int L) {
  if (L < 1 || L > 8) {
    throw std::invalid_argument("kagome: supercell size L must be in [1, 8], got " + std::to_string(L));
  }
}

int wrap(int i, int L) { return ((i % L) + L) % L; }

}  // namespace

int kagome_site_index(int i, int j, int s, int L) { return 3 * (wrap(i, L) * L + wrap(j, L)) + s; }

Vec2 kagome_site_position(int i, int j, int s) {
  const auto& lb = basis();
  const Vec2 r = i * lb.a1 + j * lb.a2;
  if (s == 1) {
    return r + 0.5 * lb.a1;
  }
  if (s == 2) {
    return r + 0.5 * lb.a2;
  }
  return r;
}

Eigen::MatrixXd kagome_adjacency(int L) {
  require_size(L);
  const int n = kagome_site_count(L);
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  auto link = [&](int p, int q) {
    adj(p, q) += 1.0;
    adj(q, p) += 1.0;
  };
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const int a = kagome_site_index(i, j, 0, L);
      // a_R meets b_R, b_{R-a1}, c_R, c_{R-a2}; b_R meets c_R and c_{R+a1-a2}.
      link(a, kagome_site_index(i, j, 1, L));
      link(a, kagome_site_index(i - 1, j, 1, L));
      link(a, kagome_site_index(i, j, 2, L));
      link(a, kagome_site_index(i, j - 1, 2, L));
      const int b = kagome_site_index(i, j, 1, L);
      link(b, kagome_site_index(i, j, 2, L));
      link(b, kagome_site_index(i + 1, j - 1, 2, L));
    }
  }
  return adj;
}

std::vector<double> kagome_hexagon_mode(int L) {
  require_size(L);
  if (L < 3) {
    throw std::invalid_argument("kagome_hexagon_mode: needs L >= 3");
  }
  std::vector<double> h(static_cast<std::size_t>(kagome_site_count(L)), 0.0);
  // Clockwise around the centre, as (i, j, s).
  const int ring[6][3] = {{0, 0, 1}, {1, 0, 0}, {1, 0, 2}, {0, 1, 1}, {0, 1, 0}, {0, 0, 2}};
  double sign = 1.0;
  for (const auto& site : ring) {
    h[static_cast<std::size_t>(kagome_site_index(site[0], site[1], site[2], L))] = sign;
    sign = -sign;
  }
  return h;
}

NeighborBound neighbor_quadratic_bound(std::span<const double> h, int L) {
  require_size(L);
  if (h.size() != static_cast<std::size_t>(kagome_site_count(L))) {
    throw std::invalid_argument("neighbor_quadratic_bound: expected " + std::to_string(kagome_site_count(L)) +
                                " bond values, got " + std::to_string(h.size()));
  }
  const Eigen::MatrixXd adj = kagome_adjacency(L);
  const Eigen::Map<const Eigen::VectorXd> x(h.data(), static_cast<Eigen::Index>(h.size()));
  NeighborBound r;
  r.neighborSum = 0.5 * x.dot(adj * x);
  r.floor = -x.squaredNorm();
  r.pass = r.neighborSum >= r.floor - 1e-12 * std::max(1.0, -r.floor);
  return r;
}

}  // namespace kekulattice
