#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kekulattice/bloch.hpp"
#include "kekulattice/energy.hpp"
#include "kekulattice/lattice.hpp"

namespace kekulattice {

enum class SymmetryClass { Pristine, KekuleO, Asymmetric };

std::string_view symmetry_name(SymmetryClass cls);

struct MinimizeOptions {
  int maxIter = 200;          // per simplex run
  double energyTol = 1e-9;
  double xTol = 1e-7;
  double symTol = 1e-5;
  int multistarts = 8;
  bool crossCheck3d = true;
  std::uint64_t seed = 0;
  // A distorted slice minimum must beat the pristine optimum by this much.
  double distortionThreshold = 1e-10;
};

struct MinimizerResult {
  HoppingTriple cfg;  // sorted ascending
  double energy = 0.0;
  SymmetryClass symClass = SymmetryClass::Pristine;
  double gap = 0.0;  // 3 sqrt(2) s
  double mu = 0.0;
  int iterations = 0;
  bool converged = false;

  // Best point of the (t~, t~, v~) slice search and its energy.
  std::array<double, 2> slicePoint{};
  double sliceEnergy = 0.0;
  // t* and E(t*, t*, t*) on the same grid.
  double pristineT = 0.0;
  double pristineEnergy = 0.0;

  bool crossChecked = false;
  double crossCheckEnergy = 0.0;
  bool crossCheckAgrees = true;
};

// Sorts cfg, then: Pristine if max - min <= symTol, KekuleO if some adjacent
// pair of the sorted values is within symTol, Asymmetric otherwise.
SymmetryClass classify_symmetry(const HoppingTriple& cfg, double symTol);

// Minimizes E(t, u, v) at rigidity mu over the nonnegative orthant.
//
// The search runs on the Kekulé slice (t~, t~, v~) from a seeded grid of
// starts, compares against the pristine optimum and, if enabled, re-runs a
// multistart simplex in all three amplitudes as a cross-check.
MinimizerResult minimize_energy(double mu, const QuadratureGrid& grid, const MinimizeOptions& opts = {});
MinimizerResult minimize_energy(double mu, const QuantumTerm& quantum, const MinimizeOptions& opts = {});

enum class Phase { Distorted, Pristine };

std::string_view phase_name(Phase phase);

// Distorted when the Kekulé slice point beats the pristine optimum by more
// than distortionThreshold and is not itself pristine within symTol. Coarse
// grids break the threefold symmetry slightly, which otherwise shows up as
// spurious distortions of order 1e-7.
Phase phase_of(const MinimizerResult& r, const MinimizeOptions& opts);

struct PhasePoint {
  double mu = 0.0;
  double tLow = 0.0;   // the doubled amplitude t = u
  double tHigh = 0.0;  // the single amplitude v
  double gap = 0.0;
  double energyKekule = 0.0;
  double energyPristine = 0.0;
  Phase phase = Phase::Pristine;
  MinimizerResult result;
};

struct PhaseScan {
  std::vector<PhasePoint> points;
  std::vector<std::string> warnings;
};

// steps >= 1 values of mu spaced evenly on [muFrom, muTo]; a single step
// samples muFrom only. Reentrant distortion is reported in warnings.
PhaseScan phase_scan(double muFrom, double muTo, int steps, const QuadratureGrid& grid,
                     const MinimizeOptions& opts = {});

// True when the best Kekulé slice point beats the pristine optimum.
bool distortion_wins(double mu, const QuantumTerm& quantum, const MinimizeOptions& opts = {});

// Bisection of distortion_wins on [0.5, 1.5] down to a bracket of width tol.
// Throws NumericalFailure unless distortion wins at 0.5 and loses at 1.5.
double transition_estimate(const QuadratureGrid& grid, double tol, const MinimizeOptions& opts = {});

}  // namespace kekulattice
