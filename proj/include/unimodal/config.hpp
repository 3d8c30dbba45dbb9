#pragma once

// Run configuration: a flat "key = value" text file, then UNIMODAL_*
// environment overrides, then command-line flags.
//
// Keys: command, n_lo, n_hi, p_lo, p_hi, family, coeffs, epsilon, seed,
// count, suite, enum_budget, dm_budget, quad_tol, workers, output, plot.
// Environment: UNIMODAL_ENUM_BUDGET, UNIMODAL_DM_BUDGET, UNIMODAL_QUAD_TOL,
// UNIMODAL_WORKERS.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace unimodal {

struct RunConfig {
  std::string command;
  std::uint64_t n_lo = 1;
  std::uint64_t n_hi = 16;
  std::uint64_t p_lo = 101;
  std::uint64_t p_hi = 1009;
  std::string family = "sr-littlewood";
  std::string coeffs = "-1,1";
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  std::uint64_t count = 100;
  std::string suite;
  std::uint64_t enum_budget = 1ULL << 24;
  std::uint64_t dm_budget = 1000000;
  double quad_tol = 1e-9;
  unsigned workers = 1;
  std::string output;  // empty: stdout
  std::string plot;    // two-column data file for scatter

  /// Throws PreconditionError on a non-positive budget or epsilon outside (0, 1).
  void validate() const;
  /// Every key, one per line, in a fixed order; doubles round-trip exactly.
  [[nodiscard]] std::string to_text() const;
  /// Throws ParseError on unknown keys or malformed values.
  static RunConfig from_text(const std::string& text, RunConfig base);
  static RunConfig from_text(const std::string& text) { return from_text(text, RunConfig()); }
  /// Applies `lookup(name)` for the UNIMODAL_* variables.
  void apply_env(const std::function<std::optional<std::string>(const std::string&)>& lookup);
  void apply_process_env();
  void set(const std::string& key, const std::string& value);
};

/// "a..b" or "a" into [lo, hi]. Throws ParseError.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text);

}  // namespace unimodal
