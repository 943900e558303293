#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "kekulattice/bloch.hpp"

namespace kekulattice::cli {

enum class Command { Bands, Energy, Minimize, PhaseScan, Critical, Kagome, Verify };
enum class OutputFormat { Csv, Json };

struct MuRange {
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
};

struct RunConfig {
  Command command = Command::Verify;
  int gridN = 256;
  std::optional<double> mu;
  std::optional<HoppingTriple> tuv;
  std::optional<MuRange> muRange;
  std::string outputPath;  // empty: standard output
  std::optional<OutputFormat> format;  // csv unless the command reports JSON by default
  std::uint64_t seed = 0;
  std::optional<int> threads;  // unset: KEKULATTICE_THREADS, then 0 (auto)
  int pathPoints = 128;        // per segment of a band path
  bool crossCheck = false;     // 3D cross-check inside phase-scan
  bool injectZTildeFault = false;
};

// Usage errors; the CLI exits with status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "t,u,v" -> triple and "FROM:TO:STEPS" -> range. Throw UsageError.
HoppingTriple parse_tuv(const std::string& text);
MuRange parse_mu_range(const std::string& text);

// %.12g
std::string format_number(double x);

// Resolves the worker count: flag, then KEKULATTICE_THREADS, then auto.
int resolve_threads(const std::optional<int>& flag);

// Runs one command and writes its report to `out` (or to config.outputPath).
// Returns the process exit status: 0 ok, 1 usage, 2 numerical failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full entry point: parses argv (argv[0] is the program name) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kekulattice::cli
