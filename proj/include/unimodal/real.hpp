#pragma once

// High-precision floating point used where exact arithmetic is out of reach
// (approximate roots, companion polynomials, numeric root finding).

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

namespace unimodal {

/// About 266 bits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>,
                                           boost::multiprecision::et_off>;
/// About 1030 bits; the escalation precision.
using RealWide = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<310>,
                                               boost::multiprecision::et_off>;
/// About 400 bits; the numeric oracle's working precision.
using RealOracle = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>,
                                                 boost::multiprecision::et_off>;
/// About 136 bits; enough for polishing roots of large Littlewood-type polynomials.
using RealPolish = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<41>,
                                                 boost::multiprecision::et_off>;

template <class R>
R to_real(const mpz_class& z) {
  R r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

template <class R>
R to_real(const mpq_class& q) {
  R r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

/// Nearest integer.
template <class R>
mpz_class round_to_integer(const R& x) {
  mpz_class z;
  R rounded = boost::multiprecision::round(x);
  mpfr_get_z(z.get_mpz_t(), rounded.backend().data(), MPFR_RNDN);
  return z;
}

}  // namespace unimodal
