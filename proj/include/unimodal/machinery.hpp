#pragma once

// The companion polynomial of a cosine polynomial's sign changes, the
// product F = P (z^{d_m} - 1)^2 Q, and instance checks of the bounds on F.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unimodal/polycore.hpp"
#include "unimodal/real.hpp"

namespace unimodal {

/// LCM(1, ..., m), with LCM over the empty range equal to 1. Throws
/// CertificationError if the value is not below 3^m (m >= 1).
Integer lcm_upto(unsigned m);

/// Enclosure of one sign change t_j in (0, pi) of T, and of x_j = cos t_j.
struct AngleEnclosure {
  RealWide t_lo, t_hi;
  Rational x_lo, x_hi;  // x_lo <= x_j <= x_hi; equal when x_j is rational
  unsigned multiplicity = 1;
};

/// Sign changes of T on (0, pi) in increasing t, each of t-width < 2^-53.
std::vector<AngleEnclosure> sign_change_points(const CosPoly& t);

struct CompanionPoly {
  unsigned d = 0;
  int sign_p = 0;  // 0 or 1
  std::vector<AngleEnclosure> roots;
  std::vector<RealWide> coeffs;  // monic, palindromic, degree 2d
  unsigned precision_bits = 0;
  double min_validation = 0;       // min over the grid of T(t) (-1)^p e^{-idt} Q(e^{it})
  double palindrome_deviation = 0;
  std::size_t grid = 0;
};

/// Throws CertificationError if the sign validation fails after one
/// escalation of precision.
CompanionPoly companion(const CosPoly& t);

struct FProduct {
  unsigned d = 0;
  unsigned m = 0;
  Integer d_m;
  CompanionPoly q;
  std::vector<std::pair<std::size_t, RealWide>> terms;  // nonzero coefficients, increasing exponent
  std::size_t near_zero = 0;                             // coefficients classified as zero
  double zero_threshold = 1e-30;
  std::size_t integer_part_nc = 0;                       // NC(P (z^{d_m} - 1)^2)
};

/// m = floor(32 d log log(2d + 3)), d_0 := 1. Throws BudgetExceeded when
/// d_m exceeds `degree_budget`.
unsigned companion_order(unsigned d);
FProduct build_F(const IntPoly& p, const Integer& degree_budget = 1000000);

struct BoundCheck {
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

/// Longest run of consecutive nonzero coefficients of F below
/// (4M)^{-2d} (2d+1)^{-d-1/2} against (|S|+2)^{4m+2} + 6d + 3.
BoundCheck verify_small_runs(const FProduct& f, const CoeffSet& s);
/// log q against 60 (4M)^{2d+1} (2d+1)^{d+3/2} ((|S|+2)^{4m+2} + 6d + 3).
BoundCheck verify_term_count(const FProduct& f, const CoeffSet& s);

struct NcPhReport {
  std::size_t u = 0;
  unsigned v = 0;
  Integer k;
  std::size_t nu = 0;
  std::size_t nc_ph = 0;
  Integer mu;
  bool skipped = false;
  std::string reason;
  bool pass = false;
};

/// NC(P (z^k - 1)) <= (nu + 1)(k + |S|^{u+1} + 3(u + 1) + 2) with u = deg R,
/// v = floor(16 u log log(u + 3)), k = d_v. `nu` defaults to NC(P R) and must
/// not be below it.
NcPhReport nc_ph_bound(const IntPoly& p, const IntPoly& r, const CoeffSet& s, std::optional<std::size_t> nu = {},
                       const Integer& degree_budget = 1000000);

struct BoundRow {
  std::string poly_id;
  std::size_t degree = 0;
  Integer abs_p1;
  std::uint64_t nz = 0;
  std::uint64_t nz_star = 0;
  std::size_t nc_1 = 0, nc_2 = 0, nc_3 = 0;
  double epsilon = 0.1;
  std::optional<double> bound_value;  // (log log log |P(1)|)^{1 - eps}, natural logs
};

/// Odd degree is reported through the lift (z + 1) P, whose interior sign
/// changes are those of P.
BoundRow theorem_bound_report(const IntPoly& p, double epsilon, const std::string& poly_id = "");

std::string scatter_header();
std::string scatter_row(const BoundRow& row);

/// Euler's phi for 0..n by a sieve.
std::vector<std::uint64_t> totient_table(std::uint64_t n);
/// phi(n) >= n / (8 log log n) for n > 3.
bool totient_check(std::uint64_t n);
/// First n in [lo, hi] where the totient bound fails.
std::optional<std::uint64_t> totient_sweep(std::uint64_t lo, std::uint64_t hi);

}  // namespace unimodal
