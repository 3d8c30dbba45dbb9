#pragma once

// Numeric root finder used to cross-check the exact counts. Aberth iteration
// in double precision, refined in multiprecision, with nearby approximations
// merged into clusters whose size is the multiplicity estimate.

#include <complex>
#include <cstdint>
#include <vector>

#include "unimodal/polycore.hpp"

namespace unimodal {

enum class OraclePrecision {
  Polish,  // about 136 bits; large degree
  Oracle,  // about 400 bits; small degree, multiplicity-sensitive
};

struct RootCluster {
  std::complex<double> center;
  unsigned multiplicity = 1;
  bool on_unit_circle = false;  // ||mean| - 1| below the circle tolerance
  bool on_real_axis = false;    // |Im mean| below the circle tolerance
  double abs_deviation = 0;     // |mean| - 1, rounded to double
};

struct NumericRootOptions {
  OraclePrecision precision = OraclePrecision::Oracle;
  int max_refine_iterations = 400;
};

/// All complex roots of P (P != 0), clustered. Zero roots form one cluster at 0.
std::vector<RootCluster> numeric_root_clusters(const IntPoly& p, const NumericRootOptions& options = {});

/// Number of roots on |z| = 1, with multiplicity.
std::uint64_t numeric_unimodular_count(const IntPoly& p, const NumericRootOptions& options = {});

/// Distinct real roots in the open interval (lo, hi).
std::size_t numeric_real_roots_in(const IntPoly& p, double lo, double hi, const NumericRootOptions& options = {});

}  // namespace unimodal
