#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kekulattice {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int gridN = 64;  // quadrature grid for the energy-based suites
  // Test hook: flips the sign of Zt(k) seen by the Zt-positivity suite.
  bool injectZTildeFault = false;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool all_pass() const;
};

// Cross-module invariant suites: spectral bounds, Omega containment, flat
// band, projection dominance, quartic consistency, Hessian oracle and
// Zt positivity. Output depends only on the options.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace kekulattice
