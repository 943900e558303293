#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace kekulattice {

struct SimplexOptions {
  int maxIter = 200;
  double fTol = 1e-9;     // spread of vertex values
  double xTol = 1e-7;     // max vertex distance from the best vertex
  double initialStep = 0.1;
};

template <std::size_t N>
struct SimplexResult {
  std::array<double, N> x{};
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead downhill simplex with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
///
/// Converged means both the value spread and the simplex size fell below
/// their tolerances before maxIter iterations.
template <std::size_t N, class Objective>
SimplexResult<N> nelder_mead(Objective&& f, const std::array<double, N>& start,
                             const SimplexOptions& opts) {
  using Point = std::array<double, N>;
  struct Vertex {
    Point x;
    double fx;
  };

  SimplexResult<N> res;
  auto eval = [&](const Point& p) {
    ++res.evaluations;
    return f(p);
  };

  std::array<Vertex, N + 1> simplex;
  simplex[0] = {start, eval(start)};
  for (std::size_t i = 0; i < N; ++i) {
    Point p = start;
    p[i] += opts.initialStep * std::max(1.0, std::abs(start[i]));
    simplex[i + 1] = {p, eval(p)};
  }

  auto order = [&] {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.fx < b.fx; });
  };
  auto along = [](const Point& from, const Point& to, double factor) {
    Point r;
    for (std::size_t i = 0; i < N; ++i) {
      r[i] = from[i] + factor * (to[i] - from[i]);
    }
    return r;
  };
  auto small_enough = [&] {
    const double spread = simplex[N].fx - simplex[0].fx;
    double size = 0.0;
    for (std::size_t v = 1; v <= N; ++v) {
      for (std::size_t i = 0; i < N; ++i) {
        size = std::max(size, std::abs(simplex[v].x[i] - simplex[0].x[i]));
      }
    }
    return spread <= opts.fTol && size <= opts.xTol;
  };

  order();
  for (res.iterations = 0; res.iterations < opts.maxIter; ++res.iterations) {
    if (small_enough()) {
      res.converged = true;
      break;
    }
    Point centroid{};
    for (std::size_t v = 0; v < N; ++v) {
      for (std::size_t i = 0; i < N; ++i) {
        centroid[i] += simplex[v].x[i] / static_cast<double>(N);
      }
    }
    Vertex& worst = simplex[N];
    const Point reflected = along(centroid, worst.x, -1.0);
    const double fr = eval(reflected);

    if (fr < simplex[0].fx) {
      const Point expanded = along(centroid, worst.x, -2.0);
      const double fe = eval(expanded);
      worst = fe < fr ? Vertex{expanded, fe} : Vertex{reflected, fr};
    } else if (fr < simplex[N - 1].fx) {
      worst = {reflected, fr};
    } else {
      const bool outside = fr < worst.fx;
      const Point contracted = along(centroid, outside ? reflected : worst.x, 0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, worst.fx)) {
        worst = {contracted, fc};
      } else {
        for (std::size_t v = 1; v <= N; ++v) {
          simplex[v].x = along(simplex[0].x, simplex[v].x, 0.5);
          simplex[v].fx = eval(simplex[v].x);
        }
      }
    }
    order();
  }
  if (!res.converged && small_enough()) {
    res.converged = true;
  }
  res.x = simplex[0].x;
  res.value = simplex[0].fx;
  return res;
}

}  // namespace kekulattice
