#pragma once

// Polynomial families: Littlewood enumerations, Fekete polynomials, the
// eventually periodic cosine family with two zeros, and seeded random draws.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "unimodal/polycore.hpp"
#include "unimodal/zerocount.hpp"

namespace unimodal {

/// splitmix64: state += 0x9e3779b97f4a7c15, then the xor-shift-multiply
/// finalizer (30, 0xbf58476d1ce4e5b9, 27, 0x94d049bb133111eb, 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n) as the high word of next() * n.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

/// Coefficients drawn independently and uniformly from S (in increasing order).
/// The leading coefficient is drawn from S \ {0} so the degree is exactly n.
IntPoly random_poly(const CoeffSet& s, std::size_t n, std::uint64_t seed);
/// Self-reciprocal variant: draws a_0..a_{n/2}, mirrors the rest, a_0 != 0.
IntPoly random_self_reciprocal(const CoeffSet& s, std::size_t n, std::uint64_t seed);

enum class Family { SelfReciprocalLittlewood, SkewReciprocalLittlewood };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

/// Number of members of degree n.
std::uint64_t family_size(std::size_t n, Family f);
/// Member with free-half encoding `mask`: bit j set means a_j = +1, else -1.
IntPoly family_member(std::size_t n, Family f, std::uint64_t mask);

/// Calls `visit` on every member in mask order. Throws BudgetExceeded when
/// the family is larger than `budget`.
void enumerate_family(std::size_t n, Family f, std::uint64_t budget,
                      const std::function<void(std::uint64_t, const IntPoly&)>& visit);
void enumerate_selfreciprocal_littlewood(std::size_t n, std::uint64_t budget,
                                         const std::function<void(std::uint64_t, const IntPoly&)>& visit);

struct EnumSummary {
  std::size_t degree = 0;
  Family family = Family::SelfReciprocalLittlewood;
  std::uint64_t count = 0;
  std::uint64_t min_nz = 0;
  std::uint64_t max_nz = 0;
  std::optional<std::uint64_t> argmin_mask;  // smallest mask attaining min_nz
  IntPoly argmin;
  Rational avg_nz;
  std::map<std::uint64_t, std::uint64_t> histogram;
};

struct CensusOptions {
  std::uint64_t budget = 1ULL << 24;
  unsigned workers = 1;
};

EnumSummary census(std::size_t n, Family f, const CensusOptions& options = {});

bool is_prime(std::uint64_t n);
/// Legendre symbol (k|p) for an odd prime p.
int legendre(std::int64_t k, std::uint64_t p);
IntPoly fekete(std::uint64_t p);

struct FeketeRow {
  std::uint64_t p = 0;
  std::uint64_t nz = 0;            // unimodular zeros of f_p, equal to those of f_p / z
  Rational fraction;               // nz / p
  Rational fraction_reduced;       // nz / (p - 2), the degree of f_p / z
  Reduction reduction = Reduction::SelfReciprocal;
  std::optional<std::uint64_t> numeric_nz;
};

struct FeketeOptions {
  bool numeric_cross_check = false;
};

FeketeRow fekete_zero_fraction(std::uint64_t p, const FeketeOptions& options = {});

/// cos t + cos((4n+1)t) + sum_{k<n} (cos((4k+1)t) - cos((4k+3)t)).
/// Checks (2 cos t)(T_n - cos t) = 1 + cos((4n+2)t) and throws
/// CertificationError if it fails.
CosPoly counterexample_T(std::size_t n);
/// Exact residual of the identity above, in cosine coefficients.
CosPoly counterexample_residual(std::size_t n);

}  // namespace unimodal
