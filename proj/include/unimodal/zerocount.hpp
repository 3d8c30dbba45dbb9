#pragma once

// Exact census of the real zeros of a cosine polynomial over one period, and
// of the unimodular zeros of integer polynomials built on top of it.
//
// Multiplicity convention. T(t) = g(cos t). A root x0 in (-1, 1) of g with
// multiplicity m gives the two zeros +-arccos(x0) of T, each of multiplicity
// m. A root of g at x = 1 (resp. -1) with multiplicity m gives a single zero
// of T at t = 0 (resp. t = pi) of multiplicity 2m, because cos t - 1 vanishes
// to second order there. With this convention NZ(T) equals the number of
// unimodular zeros of P when T(t) = P(e^{it}) e^{-int}.

#include <cstdint>
#include <utility>
#include <vector>

#include "unimodal/polycore.hpp"

namespace unimodal {

/// Sturm chain g_0 = g, g_1 = g', g_{i+1} = -prem(g_{i-1}, g_i), each entry
/// reduced to its primitive part by a positive factor.
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& g);

  [[nodiscard]] const std::vector<IntPoly>& polys() const { return polys_; }
  /// Sign variations of the chain at x (zeros skipped).
  [[nodiscard]] std::size_t variations(const Rational& x) const;
  /// V(lo) - V(hi): distinct roots in (lo, hi] for square-free g.
  [[nodiscard]] std::size_t count(const Rational& lo, const Rational& hi) const;

 private:
  std::vector<IntPoly> polys_;
};

struct SquarefreeFactor {
  IntPoly factor;
  unsigned multiplicity;
};

/// g = c * prod f_i^{m_i}; f_i square-free, primitive, positive leading
/// coefficient, pairwise coprime, m_i strictly increasing.
std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& g);

/// Exact number of distinct real roots of square-free g in (lo, hi).
/// Requires g(lo) != 0 and g(hi) != 0.
std::size_t count_roots_in(const IntPoly& g, const Rational& lo, const Rational& hi);

/// Open rational interval (lo, hi) containing exactly one root of g.
struct RootInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;
};

struct ZeroReport {
  std::vector<RootInterval> interior;  // sorted by x, pairwise disjoint
  unsigned mult_at_plus1 = 0;
  unsigned mult_at_minus1 = 0;
  std::uint64_t nz = 0;
  std::uint64_t nz_star = 0;
};

enum class IsolationMethod {
  Automatic,   // Sturm chains up to the degree limit, certified subdivision above
  Sturm,
  Subdivision,
};

struct ZeroCountOptions {
  IsolationMethod method = IsolationMethod::Automatic;
  std::size_t sturm_degree_limit = 48;
};

ZeroReport zero_report(const CosPoly& t, const ZeroCountOptions& options = {});

/// Number of unimodular zeros of a self-reciprocal P, with multiplicity.
/// Odd degree goes through the lift (z+1)P, which adds exactly one zero.
std::uint64_t nz_unimodular(const IntPoly& p, const ZeroCountOptions& options = {});

/// How nz_unimodular_any reduced its input to the self-reciprocal case.
enum class Reduction { SelfReciprocal, AntiReciprocal, ReciprocalProduct };

struct UnimodularCount {
  std::uint64_t nz = 0;
  Reduction reduction = Reduction::SelfReciprocal;
};

/// Unimodular zero count for an arbitrary nonzero integer P. Powers of z are
/// stripped; anti-reciprocal P is divided by (z - 1); any other non
/// self-reciprocal P is replaced by P * P^rev, whose count is 2 NZ(P).
UnimodularCount nz_unimodular_any(const IntPoly& p, const ZeroCountOptions& options = {});

namespace detail {

/// Isolating intervals (width < 2^-64) for all roots in (-1, 1) of the
/// square-free g, which must not vanish at +-1.
std::vector<RootInterval> isolate_sturm(const IntPoly& g);
std::vector<RootInterval> isolate_subdivision(const IntPoly& g);

/// Certificate that g is square-free over Q from gcd(g, g') = 1 modulo a prime.
/// A false result is inconclusive.
bool squarefree_mod_p(const IntPoly& g);

}  // namespace detail

}  // namespace unimodal
