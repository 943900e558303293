#pragma once

#include <functional>
#include <vector>

#include "kekulattice/bloch.hpp"
#include "kekulattice/lattice.hpp"

namespace kekulattice {

/// Trace per atom of |T| on a fixed B6 grid, with the Bloch phases cached.
///
///   VTr|T| = (1/3) avg_{B6} [ sigma1 + sigma2 + sigma3 ](A(k))
///
/// Construct once per grid and reuse for repeated configurations.
class QuantumTerm {
 public:
  explicit QuantumTerm(QuadratureGrid grid);

  double vtr_abs_T(const HoppingTriple& cfg) const;

  const QuadratureGrid& grid() const { return grid_; }

 private:
  QuadratureGrid grid_;
  std::vector<BlochPhases> phases_;
  std::vector<double> multiplicity_;  // 2 for a k, -k pair, else 1
};

// Throws std::invalid_argument unless grid.zone == B6.
double vtr_abs_T(const HoppingTriple& cfg, const QuadratureGrid& grid);

// VTr|H| for the pristine t = 1 operator: average of m over a B2 grid, or
// VTr|T(1,1,1)| over a B6 grid.
double vtr_abs_H(const QuadratureGrid& grid);

// Average of 1/m over a B2 grid (Dirac points must not be sampled).
double vtr_inv_abs_H(const QuadratureGrid& grid);

// Coarser companion grid (n/2, same shift) used for refinement errors.
QuadratureGrid coarse_grid(const QuadratureGrid& grid);

// Elastic term (mu/4) sum (x_i - 1)^2.
double elastic_energy(const HoppingTriple& cfg, double mu);

struct EnergyBreakdown {
  double quantum = 0.0;  // -VTr|T|
  double elastic = 0.0;
  double total = 0.0;
  int gridN = 0;
  double quadError = 0.0;  // |quantum(n) - quantum(n/2)|
};

EnergyBreakdown total_energy(const HoppingTriple& cfg, double mu, const QuadratureGrid& grid);

// Total energy without the refinement estimate, for inner optimization loops.
double energy_value(const HoppingTriple& cfg, double mu, const QuantumTerm& quantum);

// t* = 1 + (2 / (3 mu)) VTr|H|, the minimizer over pristine configurations.
double pristine_optimum(double mu, const QuadratureGrid& grid);

/// Elastic energy per bond F in the generalized model
/// E(t) = -VTr|T| + (mu/4) sum F(t_i).
struct ElasticModel {
  enum class Kind { Quadratic, Custom };

  Kind kind = Kind::Quadratic;
  std::function<double(double)> F;
  std::function<double(double)> Fprime;
  double strongConvexityAlpha = 1.0;  // min F'' / 2
  double minimumAt = 1.0;             // C, the unique minimizer of F

  // F(x) = (x - 1)^2.
  static ElasticModel quadratic();

  // Validates alpha > 0, C > 0 and F(t) >= F(|t|) on sampled t < 0.
  static ElasticModel custom(std::function<double(double)> f, std::function<double(double)> fprime,
                             double alpha, double minimum_at);

  // F -> factor F; the convexity constant scales with it.
  ElasticModel scaled(double factor) const;
};

// Unique t* >= C with F'(t*) = (4 / (3 mu)) VTr|H|, by bisection to 1e-10.
double generalized_pristine_optimum(const ElasticModel& model, double mu, const QuadratureGrid& grid);

// Smallest mu with (mu/2) alpha >= VTr M / t*(mu), where
// VTr M = (3/2) avg(1/m) - (1/6) avg(m) over the B2 grid.
double generalized_critical_mu_bound(const ElasticModel& model, const QuadratureGrid& gridB2);

}  // namespace kekulattice
