#pragma once

// Exact integer polynomial arithmetic and the conversions between
// self-reciprocal algebraic polynomials, cosine polynomials and their
// Chebyshev (algebraic in x = cos t) images.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "unimodal/errors.hpp"

namespace unimodal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial with arbitrary-precision integer coefficients, a_0 first.
/// Storage is kept canonical: no trailing zero coefficients, so the zero
/// polynomial has empty storage and no degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(std::size_t power, const Integer& coeff = 1);

  [[nodiscard]] std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of z^i; zero beyond the degree.
  [[nodiscard]] Integer coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }
  [[nodiscard]] const Integer& leading() const { return coeffs_.back(); }
  [[nodiscard]] std::span<const Integer> coeffs() const { return coeffs_; }

  [[nodiscard]] Integer eval(const Integer& x) const;
  /// Sign of the value at the rational point x (-1, 0, +1), computed exactly.
  [[nodiscard]] int sign_at(const Rational& x) const;
  [[nodiscard]] IntPoly derivative() const;
  /// z^n P(1/z) with n = degree(P).
  [[nodiscard]] IntPoly reversed() const;
  /// Positive gcd of the coefficients (0 for the zero polynomial).
  [[nodiscard]] Integer content() const;
  /// P / content, with positive leading coefficient.
  [[nodiscard]] IntPoly primitive_part() const;
  /// Largest v with z^v | P; 0 for the zero polynomial.
  [[nodiscard]] std::size_t low_order() const;
  /// P / z^v.
  [[nodiscard]] IntPoly shift_down(std::size_t v) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Cosine polynomial T(t) = c_0 + sum_{j>=1} c_j cos(j t) with integer c_j.
class CosPoly {
 public:
  CosPoly() = default;
  explicit CosPoly(std::vector<Integer> coeffs);
  CosPoly(std::initializer_list<long> coeffs);

  /// Highest frequency with a nonzero coefficient; none for T = 0.
  [[nodiscard]] std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] Integer coeff(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : Integer(0);
  }
  [[nodiscard]] std::span<const Integer> coeffs() const { return coeffs_; }
  /// T(0) = sum of the coefficients.
  [[nodiscard]] Integer value_at_zero() const;
  [[nodiscard]] double eval(double t) const;

  CosPoly& operator+=(const CosPoly& o);
  CosPoly& operator-=(const CosPoly& o);
  CosPoly& operator*=(const Integer& c);
  friend CosPoly operator+(CosPoly a, const CosPoly& b) { return a += b; }
  friend CosPoly operator-(CosPoly a, const CosPoly& b) { return a -= b; }
  friend CosPoly operator*(CosPoly a, const Integer& c) { return a *= c; }
  friend bool operator==(const CosPoly& a, const CosPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Finite coefficient set S with M(S) = max |s|.
class CoeffSet {
 public:
  CoeffSet() = default;
  explicit CoeffSet(std::set<Integer> elements);
  CoeffSet(std::initializer_list<long> elements);
  /// The distinct coefficient values of P (the smallest S with P in P_n(S)).
  static CoeffSet of(const IntPoly& p);

  [[nodiscard]] const std::set<Integer>& elements() const { return elements_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const Integer& max_abs() const { return max_abs_; }
  [[nodiscard]] bool contains(const Integer& v) const { return elements_.count(v) != 0; }

 private:
  std::set<Integer> elements_;
  Integer max_abs_ = 0;
};

// Structural predicates. The zero polynomial satisfies all of them.
bool is_self_reciprocal(const IntPoly& p);
bool is_skew_reciprocal(const IntPoly& p);
/// a_j = -a_{n-j}.
bool is_anti_reciprocal(const IntPoly& p);

/// T(t) = P(e^{it}) e^{-int} for self-reciprocal P of even degree 2n.
/// Throws PreconditionError otherwise.
CosPoly to_cosine(const IntPoly& p);
/// The self-reciprocal P with P(e^{it}) e^{-int} = 2 T(t).
IntPoly cosine_to_selfreciprocal(const CosPoly& t);
/// g with g(cos t) = T(t), built from the integer Chebyshev recursion.
IntPoly to_chebyshev_algebraic(const CosPoly& t);
/// Chebyshev polynomial of the first kind T_j.
IntPoly chebyshev_t(std::size_t j);
/// Exact product 2 A(t) B(t) in the cosine basis.
CosPoly cos_product_doubled(const CosPoly& a, const CosPoly& b);

/// Number of nonzero coefficients.
std::size_t nc(const IntPoly& p);
/// Number of windows a_u + ... + a_{u+k-1} (0 <= u <= n-k+1) with nonzero sum.
std::size_t nc_k(const IntPoly& p, std::size_t k);

IntPoly mul(const IntPoly& p, const IntPoly& q);
/// P(z) (z^k - 1).
IntPoly shift_diff(const IntPoly& p, std::size_t k);
/// NC(P(z)(z^k - 1)) without materializing the product.
std::size_t nc_shift_diff(const IntPoly& p, std::size_t k);

// Division helpers used by the root counting code.

/// Pseudo-remainder with positive multiplier |lc(B)|^e, so signs are preserved.
IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Quotient a / b over Q, scaled to a primitive integer polynomial.
/// Throws PreconditionError when b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);
/// Primitive gcd over Z with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace unimodal
