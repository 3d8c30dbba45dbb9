#pragma once

// Verifiers for L1 lower bounds of exponential sums, antiderivative and
// level-crossing estimates near t = 0, and exact integer linear algebra.

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unimodal/polycore.hpp"

namespace unimodal {

/// sum_j a_j e^{i lambda_j t}; frequencies strictly increasing, no zero terms.
class ExpSum {
 public:
  struct Term {
    long frequency;
    std::complex<double> coeff;
  };

  ExpSum() = default;
  /// Sorts by frequency, merges equal frequencies and drops zero terms.
  explicit ExpSum(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] std::complex<double> eval(double t) const;
  /// max |lambda_j|.
  [[nodiscard]] long max_frequency() const;

 private:
  std::vector<Term> terms_;
};

struct QuadratureResult {
  double value = 0;
  double error_bound = 0;
};

struct QuadratureOptions {
  double relative_tolerance = 1e-9;
  int max_depth = 40;
};

/// Integral of f over [a, b] by adaptive composite 10-point Gauss-Legendre.
/// `frequency` is an upper bound on the oscillation rate of f and sets the
/// initial panel count.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double frequency,
                           const QuadratureOptions& options = {});

/// Integral of |f(e^{it})| over [0, 2 pi].
QuadratureResult l1_circle(const ExpSum& f, const QuadratureOptions& options = {});
/// Integral of |P(e^{it})| over [-delta, delta].
QuadratureResult l1_arc(const IntPoly& p, double delta, const QuadratureOptions& options = {});

/// One verifier outcome; `pass` iff margin >= 0.
struct CheckRow {
  std::string id;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  bool pass = false;
  std::string note;
};

struct LittlewoodBoundReport {
  double lhs = 0;
  double error_bound = 0;
  double rhs_harmonic = 0;  // (1/30) sum |a_j| / j
  double rhs_log = 0;       // (gamma/30) log m
  double margin_harmonic = 0;
  double margin_log = 0;
  [[nodiscard]] bool pass() const { return margin_harmonic >= 0 && margin_log >= 0; }
};

LittlewoodBoundReport check_littlewood_bound(const ExpSum& f, const QuadratureOptions& options = {});

/// min |z| over nonzero z in {s_1 + ... + s_k : s_j in S u {0}}; none if all sums vanish.
std::optional<Integer> window_sum_gap(const CoeffSet& s, std::size_t k);

struct ArcL1Report {
  double lhs = 0;
  double error_bound = 0;
  double rhs = 0;
  double margin = 0;
  std::size_t nc_k = 0;
  std::uint64_t mu = 0;
  bool degenerate = false;  // gamma undefined
  bool pass = false;
};

/// Integral of |P(e^{it})| over [-delta, delta] against
/// (gamma/30) log NC_k(P) - pi^2 mu M / delta. When `mu` is absent it is
/// NC(P (z^k - 1)); a supplied mu must bound that count.
ArcL1Report check_arc_l1_bound(const IntPoly& p, const CoeffSet& s, std::size_t k, double delta,
                              std::optional<std::uint64_t> mu = std::nullopt,
                              const QuadratureOptions& options = {});

/// max over [-delta, delta] of |c_0 x + sum_j (c_j / j) sin(j x)|, the
/// antiderivative of T vanishing at 0.
double antiderivative_max(const CosPoly& t, double delta);

struct AntiderivativeReport {
  double max_abs = 0;
  double bound = 0;  // 42 k (mu + 1) M
  std::uint64_t mu = 0;
  bool pass = false;
};

/// Self-reciprocal P of even degree, delta = 1 / (2k) unless given.
AntiderivativeReport check_antiderivative_bound(const IntPoly& p, const CoeffSet& s, std::size_t k,
                              std::optional<double> delta = std::nullopt);

struct LevelCrossings {
  double level = 0;
  std::size_t crossings = 0;
};

/// Level eta in [min R, max R] maximizing strict sign changes of R - eta
/// between consecutive samples. Constant samples give crossings 0, eta = R.
LevelCrossings best_level_crossings(const std::vector<double>& samples);

struct LevelCrossingReport {
  double total_variation = 0;  // L
  double max_abs = 0;          // N
  std::size_t required = 0;    // floor(L / 2N)
  LevelCrossings best;
  std::size_t grid = 0;
  bool pass = false;
};

/// At least floor(L / 2N) crossings of some level by R(x) = integral of T from 0
/// to x on [-delta, delta], where L is the total variation and N = max |R|.
/// The grid starts at 64 (deg T + 1) + 1 points and doubles up to twice on failure.
LevelCrossingReport check_level_crossings(const CosPoly& t, double delta);

struct SignChangeReport {
  std::uint64_t nz_star = 0;
  double rhs = 0;
  /// Informational: 84 k (mu + 1) k M (2d) + 2 k pi^2 mu M - log NC_k(P).
  double variant_slack = 0;
  std::uint64_t mu = 0;
  bool degenerate = false;
  bool pass = false;
};

SignChangeReport check_sign_change_bound(const IntPoly& p, const CoeffSet& s, std::size_t k);

/// x = A^{-1} b, exact; b has Gaussian rational entries.
struct GaussianRational {
  Rational re;
  Rational im;
};

using IntMatrix = std::vector<std::vector<Integer>>;

struct SolveBoundReport {
  std::vector<GaussianRational> solution;
  Rational max_x_squared;
  Rational bound_squared;  // M^{2(d-1)} d^d max |b|^2
  bool pass = false;
};

/// Throws PreconditionError for non-square or singular A.
SolveBoundReport check_integer_solve_bound(const IntMatrix& a, const std::vector<GaussianRational>& b);

/// Rank over Q, by fraction-free elimination.
std::size_t integer_rank(IntMatrix rows);
/// Rank of the span of all length-D windows of x.
std::size_t window_rank(const std::vector<Integer>& x, std::size_t window);
/// Smallest p in [1, min(max_period, len - 1)] with x[r + p] = x[r] for all r.
std::optional<std::size_t> detect_period(const std::vector<Integer>& x, std::size_t max_period);

/// RFC 4180 quoting for one CSV field.
std::string csv_field(const std::string& s);
std::string csv_header_check();
std::string csv_row(const CheckRow& row);

}  // namespace unimodal
