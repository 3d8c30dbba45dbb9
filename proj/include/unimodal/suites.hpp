#pragma once

// Seeded batches of the inequality verifiers, shared by the command line
// and the acceptance run. Each instance draws from its own generator seeded
// by (seed, index), so results do not depend on the worker count.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unimodal/analysis.hpp"

namespace unimodal {

struct SuiteOptions {
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::uint64_t dm_budget = 1000000;
  double quad_tol = 1e-9;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckRow> rows;
  std::vector<std::pair<std::string, std::string>> skipped;  // (id, reason)
  [[nodiscard]] std::size_t failures() const;
  [[nodiscard]] bool pass() const { return failures() == 0; }
};

/// littlewood-l1, arc-l1, antiderivative, level-crossings, sign-change,
/// solve-bound, small-runs, term-count, nc-ph, totient, lcm.
const std::vector<std::string>& suite_names();

/// The corpus suites (small-runs, term-count, nc-ph) ignore `count` and run
/// over machinery_corpus(). Throws PreconditionError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

/// Self-reciprocal instances for the F-product checks: 1, 1 + z + z^2, the
/// geometric sums of even degree up to 16, every self-reciprocal Littlewood
/// polynomial of even degree 2..16, and 2 T_n for the counterexample family
/// n = 1..10.
std::vector<std::pair<std::string, IntPoly>> machinery_corpus();

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace unimodal
