#include "kekulattice/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "kekulattice/error.hpp"
#include "kekulattice/simplex.hpp"

namespace kekulattice {

std::string_view symmetry_name(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::Pristine:
      return "Pristine";
    case SymmetryClass::KekuleO:
      return "KekuleO";
    case SymmetryClass::Asymmetric:
      return "Asymmetric";
  }
  return "?";
}

std::string_view phase_name(Phase phase) { return phase == Phase::Distorted ? "Distorted" : "Pristine"; }

Phase phase_of(const MinimizerResult& r, const MinimizeOptions& opts) {
  const HoppingTriple slice{r.slicePoint[0], r.slicePoint[0], r.slicePoint[1]};
  const bool lower = r.sliceEnergy < r.pristineEnergy - opts.distortionThreshold;
  return lower && classify_symmetry(slice, opts.symTol) != SymmetryClass::Pristine ? Phase::Distorted
                                                                                      : Phase::Pristine;
}

SymmetryClass classify_symmetry(const HoppingTriple& cfg, double symTol) {
  if (!(symTol > 0.0)) {
    throw std::invalid_argument("classify_symmetry: symTol must be positive");
  }
  const HoppingTriple s = cfg.sorted();
  if (s.v - s.t <= symTol) {
    return SymmetryClass::Pristine;
  }
  if (s.u - s.t <= symTol || s.v - s.u <= symTol) {
    return SymmetryClass::KekuleO;
  }
  return SymmetryClass::Asymmetric;
}

namespace {

using Slice = std::array<double, 2>;
using Full = std::array<double, 3>;

HoppingTriple slice_triple(const Slice& x) {
  const double t = std::abs(x[0]);
  return {t, t, std::abs(x[1])};
}

HoppingTriple full_triple(const Full& x) { return {std::abs(x[0]), std::abs(x[1]), std::abs(x[2])}; }

auto lexicographic(const HoppingTriple& c) { return std::tuple(c.t, c.u, c.v); }

struct SearchOutcome {
  Slice x{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

SimplexOptions simplex_options(const MinimizeOptions& opts, double step) {
  SimplexOptions so;
  so.maxIter = opts.maxIter;
  so.fTol = opts.energyTol;
  so.xTol = opts.xTol;
  so.initialStep = step;
  return so;
}

}  // namespace

MinimizerResult minimize_energy(double mu, const QuadratureGrid& grid, const MinimizeOptions& opts) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("minimize_energy: mu must be positive");
  }
  return minimize_energy(mu, QuantumTerm(grid), opts);
}

MinimizerResult minimize_energy(double mu, const QuantumTerm& quantum, const MinimizeOptions& opts) {
  if (!(mu > 0.0)) {
    throw std::invalid_argument("minimize_energy: mu must be positive");
  }
  if (opts.multistarts < 1 || opts.maxIter < 1) {
    throw std::invalid_argument("minimize_energy: need at least one start and one iteration");
  }
  auto energy = [&](const HoppingTriple& c) { return energy_value(c, mu, quantum); };

  MinimizerResult res;
  res.mu = mu;
  res.pristineT = 1.0 + 2.0 / (3.0 * mu) * quantum.vtr_abs_T({1.0, 1.0, 1.0});
  res.pristineEnergy = energy({res.pristineT, res.pristineT, res.pristineT});

  // Minimizers scale roughly like t*, so the start box follows it for soft lattices.
  const double scale = std::max(1.0, res.pristineT / 2.0);
  const double lo = 0.2 * scale;
  const double hi = 3.0 * scale;

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(-0.05, 0.05);

  std::vector<Slice> starts;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == 1 && j == 1) {
        continue;
      }
      const double x = lo + (hi - lo) * (i / 2.0 + jitter(rng));
      const double y = lo + (hi - lo) * (j / 2.0 + jitter(rng));
      starts.push_back({std::abs(x), std::abs(y)});
    }
  }
  while (static_cast<int>(starts.size()) > opts.multistarts) {
    starts.pop_back();
  }
  while (static_cast<int>(starts.size()) < opts.multistarts) {
    std::uniform_real_distribution<double> box(lo, hi);
    starts.push_back({box(rng), box(rng)});
  }
  // A start just off the pristine line picks up distortions that bifurcate from t*.
  starts.push_back({0.95 * res.pristineT, 1.1 * res.pristineT});

  auto slice_energy = [&](const Slice& x) { return energy(slice_triple(x)); };
  const SimplexOptions wide = simplex_options(opts, 0.1);

  SearchOutcome best;
  bool have = false;
  for (const auto& s : starts) {
    const auto run = nelder_mead<2>(slice_energy, s, wide);
    best.iterations += run.iterations;
    const Slice x{std::abs(run.x[0]), std::abs(run.x[1])};
    const bool better = !have || run.value < best.value ||
                        (run.value == best.value &&
                         lexicographic(slice_triple(x).sorted()) < lexicographic(slice_triple(best.x).sorted()));
    if (better) {
      best.x = x;
      best.value = run.value;
      have = true;
    }
  }
  // Restart from the winner with a fresh simplex to shake off premature collapse.
  const auto polish = nelder_mead<2>(slice_energy, best.x, simplex_options(opts, 0.01));
  best.iterations += polish.iterations;
  best.converged = polish.converged;
  if (polish.value <= best.value) {
    best.x = {std::abs(polish.x[0]), std::abs(polish.x[1])};
    best.value = polish.value;
  }

  res.slicePoint = best.x;
  res.sliceEnergy = best.value;
  res.iterations = best.iterations;
  res.converged = best.converged;

  if (phase_of(res, opts) == Phase::Distorted) {
    res.cfg = slice_triple(best.x).sorted();
    res.energy = best.value;
  } else {
    res.cfg = {res.pristineT, res.pristineT, res.pristineT};
    res.energy = res.pristineEnergy;
  }

  if (opts.crossCheck3d) {
    auto full_energy = [&](const Full& x) { return energy(full_triple(x)); };
    const HoppingTriple c = res.cfg;
    const double d = 0.05 * scale;
    std::uniform_real_distribution<double> box(lo, hi);
    const std::vector<Full> starts3{
        {c.t + d, c.u - d, c.v},
        {c.v, c.t - d, c.u + d},
        {box(rng), box(rng), box(rng)},
        {box(rng), box(rng), box(rng)},
    };
    const SimplexOptions wide3 = simplex_options(opts, 0.1);
    double best3 = 0.0;
    Full x3{};
    for (std::size_t i = 0; i < starts3.size(); ++i) {
      const auto run = nelder_mead<3>(full_energy, starts3[i], wide3);
      if (i == 0 || run.value < best3) {
        best3 = run.value;
        x3 = run.x;
      }
    }
    const auto run = nelder_mead<3>(full_energy, x3, simplex_options(opts, 0.01));
    best3 = std::min(best3, run.value);
    res.crossChecked = true;
    res.crossCheckEnergy = best3;
    res.crossCheckAgrees = std::abs(best3 - res.energy) <= 1e-7;
    res.converged = res.converged && res.crossCheckAgrees;
  }

  res.symClass = classify_symmetry(res.cfg, opts.symTol);
  res.gap = 3.0 * std::sqrt(2.0) * res.cfg.spread();
  return res;
}

bool distortion_wins(double mu, const QuantumTerm& quantum, const MinimizeOptions& opts) {
  MinimizeOptions o = opts;
  o.crossCheck3d = false;
  return phase_of(minimize_energy(mu, quantum, o), o) == Phase::Distorted;
}

PhaseScan phase_scan(double muFrom, double muTo, int steps, const QuadratureGrid& grid,
                     const MinimizeOptions& opts) {
  if (!(muFrom > 0.0)) {
    throw std::invalid_argument("phase_scan: mu range must be positive");
  }
  if (steps < 1) {
    throw std::invalid_argument("phase_scan: steps must be at least 1");
  }
  if (steps > 1 && !(muFrom < muTo)) {
    throw std::invalid_argument("phase_scan: need muFrom < muTo");
  }
  const QuantumTerm quantum(grid);
  PhaseScan scan;
  for (int i = 0; i < steps; ++i) {
    const double mu = steps == 1 ? muFrom : muFrom + (muTo - muFrom) * i / (steps - 1);
    PhasePoint p;
    p.mu = mu;
    p.result = minimize_energy(mu, quantum, opts);
    p.tLow = p.result.slicePoint[0];
    p.tHigh = p.result.slicePoint[1];
    p.energyKekule = p.result.sliceEnergy;
    p.energyPristine = p.result.pristineEnergy;
    p.phase = phase_of(p.result, opts);
    if (p.phase == Phase::Pristine) {
      p.tLow = p.tHigh = p.result.pristineT;
    }
    p.gap = p.result.gap;
    if (!scan.points.empty() && scan.points.back().phase == Phase::Pristine && p.phase == Phase::Distorted) {
      std::ostringstream msg;
      msg << "distorted phase reappears at mu = " << mu << " after a pristine point";
      scan.warnings.push_back(msg.str());
    }
    if (!p.result.converged) {
      std::ostringstream msg;
      msg << "minimizer did not converge at mu = " << mu;
      scan.warnings.push_back(msg.str());
    }
    scan.points.push_back(std::move(p));
  }
  return scan;
}

double transition_estimate(const QuadratureGrid& grid, double tol, const MinimizeOptions& opts) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("transition_estimate: tol must be positive");
  }
  const QuantumTerm quantum(grid);
  double lo = 0.5;
  double hi = 1.5;
  if (!distortion_wins(lo, quantum, opts) || distortion_wins(hi, quantum, opts)) {
    throw NumericalFailure("transition_estimate: distortion must win at mu = 0.5 and lose at mu = 1.5");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (distortion_wins(mid, quantum, opts)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace kekulattice
