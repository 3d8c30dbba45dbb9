// Root isolation on (-1, 1) for square-free integer polynomials.
//
// Two routes produce the same contract (sorted open rational intervals of
// width < 2^-64, one simple root each):
//   * Sturm bisection, exact throughout; used for moderate degree.
//   * Subdivision of t in [0, pi] for f(cos t) written in the Chebyshev basis,
//     with exclusion and monotonicity tests carrying explicit floating error
//     bounds, followed by exact sign verification of every reported interval.
//     Sturm chains of degree-500 Chebyshev images are out of reach, this is not.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <quadmath.h>

#include "unimodal/real.hpp"
#include "unimodal/zerocount.hpp"

namespace unimodal::detail {

namespace {

const Rational kNudge = Rational(1) / (Integer(1) << 64);

// Bisect a sign-changing interval with a single simple root down to width < 2^-64.
RootInterval refine_single(const IntPoly& f, Rational lo, Rational hi) {
  const int slo = f.sign_at(lo);
  const Rational target = Rational(1) / (Integer(1) << 64);
  while (hi - lo >= target) {
    Rational mid = (lo + hi) / 2;
    const int s = f.sign_at(mid);
    if (s == 0) {
      const Rational eps = kNudge / 4;
      return {mid - eps, mid + eps, 1};
    }
    if (s == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi, 1};
}

// A split point inside (lo, hi) where f does not vanish.
Rational split_point(const IntPoly& f, const Rational& lo, const Rational& hi) {
  const Rational mid = (lo + hi) / 2;
  if (f.sign_at(mid) != 0) return mid;
  const Rational step = (hi - lo) / (Integer(1) << 20);
  for (long j = 1;; ++j) {
    for (int sign : {1, -1}) {
      Rational c = mid + step * sign * j;
      if (c > lo && c < hi && f.sign_at(c) != 0) return c;
    }
  }
}

// ---------------------------------------------------------------- modular

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(std::vector<u64>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Degree of gcd(a, b) over F_p (a, b trimmed, a nonzero).
std::size_t gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  while (!b.empty()) {
    const u64 inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const u64 factor = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + p - mulmod(factor, b[i], p)) % p;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

bool squarefree_mod_p(const IntPoly& g) {
  if (g.is_zero()) return false;
  if (*g.degree() <= 1) return true;
  static constexpr u64 kPrimes[] = {2305843009213693951ULL, 4611686018427387847ULL, 1000000007ULL};
  for (u64 p : kPrimes) {
    std::vector<u64> a(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) a[i] = mpz_fdiv_ui(g.coeff(i).get_mpz_t(), p);
    if (a.back() == 0) continue;
    std::vector<u64> d(g.size() - 1);
    for (std::size_t i = 1; i < g.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
    trim(d);
    if (d.empty()) continue;
    if (gcd_degree_mod(a, d, p) == 0) return true;
  }
  return false;
}

std::vector<RootInterval> isolate_sturm(const IntPoly& g) {
  std::vector<RootInterval> out;
  if (g.is_zero() || *g.degree() == 0) return out;
  const SturmChain chain(g);
  struct Pending {
    Rational lo, hi;
    std::size_t count;
  };
  const Rational lo0 = -1, hi0 = 1;
  std::vector<Pending> stack{{lo0, hi0, chain.count(lo0, hi0)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back(refine_single(g, cur.lo, cur.hi));
      continue;
    }
    const Rational mid = split_point(g, cur.lo, cur.hi);
    const std::size_t left = chain.count(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

// ---------------------------------------------------------------- subdivision

namespace {

using Float = long double;
constexpr Float kUnit = 0x1p-64L;

// |z| / 2^shift rounded to 64 significant bits, with sign.
Float scaled_to_float(const Integer& z, long shift) {
  if (z == 0) return 0.0L;
  Integer a = abs(z);
  const long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  long drop = bits > 64 ? bits - 64 : 0;
  if (drop > 0) mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  const u64 top = mpz_get_ui(a.get_mpz_t());
  const Float v = std::ldexp(static_cast<Float>(top), static_cast<int>(drop - shift));
  return z < 0 ? -v : v;
}

// f = sum_j cheb[j] T_j / 2^shift.
struct ChebyshevForm {
  std::vector<Integer> cheb;
  long shift = 0;
};

ChebyshevForm monomial_to_chebyshev(const IntPoly& f) {
  // Horner in the Chebyshev basis: multiplying by 2x maps T_j to T_{j+1} + T_{j-1}.
  const std::size_t n = *f.degree();
  ChebyshevForm out;
  out.cheb.assign(n + 1, 0);
  out.cheb[0] = f.coeff(n);
  std::size_t top = 0;
  for (std::size_t i = n; i-- > 0;) {
    std::vector<Integer> next(n + 1);
    for (std::size_t j = 0; j <= top; ++j) {
      const Integer& c = out.cheb[j];
      if (c == 0) continue;
      if (j == 0) {
        next[1] += 2 * c;
      } else {
        next[j + 1] += c;
        next[j - 1] += c;
      }
    }
    ++top;
    ++out.shift;
    Integer add = f.coeff(i);
    mpz_mul_2exp(add.get_mpz_t(), add.get_mpz_t(), static_cast<mp_bitcnt_t>(out.shift));
    next[0] += add;
    out.cheb = std::move(next);
  }
  return out;
}

struct Eval {
  Float f, f1, f2;
};

class TrigForm {
 public:
  explicit TrigForm(const ChebyshevForm& form) {
    const std::size_t n = form.cheb.size();
    b_.resize(n);
    for (std::size_t j = 0; j < n; ++j) b_[j] = scaled_to_float(form.cheb[j], form.shift);
    Float a0 = 0, a1 = 0, a2 = 0, a3 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Float m = std::fabs(b_[j]);
      const Float jj = static_cast<Float>(j);
      a0 += m;
      a1 += jj * m;
      a2 += jj * jj * m;
      a3 += jj * jj * jj * m;
    }
    const Float safety = 1.0L + 1e-12L;
    bound2_ = a2 * safety;
    bound3_ = a3 * safety;
    // Recurrence drift (a few units per step), summation and the 64-bit
    // coefficient truncation, with a factor 8 of headroom.
    const Float per = (static_cast<Float>(n) * 8.0L + 16.0L) * kUnit * 8.0L;
    err0_ = a0 * per;
    err1_ = a1 * per;
    err2_ = a2 * per;
  }

  // cos(jt), sin(jt) by the angle-addition recurrence; its drift is linear in j.
  [[nodiscard]] Eval at(Float t) const {
    const Float c1 = std::cos(t), s1 = std::sin(t);
    Float c = 1, s = 0;
    Eval e{b_[0], 0, 0};
    for (std::size_t j = 1; j < b_.size(); ++j) {
      const Float cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
      const Float jj = static_cast<Float>(j);
      e.f += b_[j] * c;
      e.f1 -= jj * b_[j] * s;
      e.f2 -= jj * jj * b_[j] * c;
    }
    return e;
  }

  [[nodiscard]] Float value(Float t) const {
    const Float c1 = std::cos(t), s1 = std::sin(t);
    Float c = 1, s = 0;
    Float v = b_[0];
    for (std::size_t j = 1; j < b_.size(); ++j) {
      const Float cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
      v += b_[j] * c;
    }
    return v;
  }

  Float bound2_ = 0, bound3_ = 0;
  Float err0_ = 0, err1_ = 0, err2_ = 0;

 private:
  std::vector<Float> b_;
};

struct Cell {
  Float lo, hi;
  int sign_lo;
};

class Subdivider {
 public:
  explicit Subdivider(const TrigForm& form) : form_(form) {}

  void run(Float lo, int slo, Float hi, int shi, int depth) {
    if (depth > 90) throw CertificationError("isolate_subdivision: depth limit reached");
    const Float mid = (lo + hi) / 2;
    const Float rho = (hi - lo) / 2;
    const Eval e = form_.at(mid);
    const Float lower_f =
        std::fabs(e.f) - form_.err0_ - (std::fabs(e.f1) + form_.err1_) * rho - form_.bound2_ * rho * rho / 2;
    if (lower_f > 0 && slo == shi) return;
    const Float lower_f1 =
        std::fabs(e.f1) - form_.err1_ - (std::fabs(e.f2) + form_.err2_) * rho - form_.bound3_ * rho * rho / 2;
    if (lower_f1 > 0) {
      if (slo != shi) cells_.push_back({lo, hi, slo});
      return;
    }
    static constexpr Float kFractions[] = {0.5L, 0.4637L, 0.5371L, 0.4213L, 0.5829L, 0.3541L, 0.6397L};
    for (Float frac : kFractions) {
      const Float s = lo + (hi - lo) * frac;
      if (!(s > lo && s < hi)) continue;
      const Float v = form_.value(s);
      if (std::fabs(v) > form_.err0_) {
        const int ss = v > 0 ? 1 : -1;
        run(lo, slo, s, ss, depth + 1);
        run(s, ss, hi, shi, depth + 1);
        return;
      }
    }
    throw CertificationError("isolate_subdivision: no certifiable split point");
  }

  std::vector<Cell> cells_;

 private:
  const TrigForm& form_;
};

using Quad = __float128;

Quad scaled_to_quad(const Integer& z, long shift) {
  if (z == 0) return 0;
  Integer a = abs(z);
  const long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
  const long drop = bits > 113 ? bits - 113 : 0;
  if (drop > 0) mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  Integer high;
  mpz_fdiv_q_2exp(high.get_mpz_t(), a.get_mpz_t(), 64);
  Integer low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), a.get_mpz_t(), 64);
  const Quad v = ldexpq(static_cast<Quad>(mpz_get_ui(high.get_mpz_t())), 64) +
                 static_cast<Quad>(mpz_get_ui(low.get_mpz_t()));
  const Quad scaled = ldexpq(v, static_cast<int>(drop - shift));
  return z < 0 ? -scaled : scaled;
}

Quad tcos(Quad x) { return cosq(x); }
Quad tsin(Quad x) { return sinq(x); }
Real tcos(const Real& x) { return cos(x); }
Real tsin(const Real& x) { return sin(x); }

// round(x 2^bits) for |x| <= 1.
Integer scaled_round(Quad x, int bits) {
  const Quad y = roundq(ldexpq(x, bits));
  const Quad high = floorq(ldexpq(y, -64));
  const Quad low = y - ldexpq(high, 64);
  Integer out = static_cast<long>(high);
  out <<= 64;
  out += Integer(std::to_string(static_cast<unsigned long>(low)));
  return out;
}

Integer scaled_round(const Real& x, int bits) { return round_to_integer(ldexp(x, bits)); }

// Bracketed Newton for the unique zero of sum_j b_j cos(j t) in (lo, hi).
template <class T>
T polish_zero(const std::vector<T>& b, T lo, T hi, int sign_lo, const T& tol) {
  const std::size_t n = b.size();
  auto eval = [&](const T& t, T& f, T& df) {
    // cos(jt), sin(jt) by the angle-addition recurrence.
    const T c1 = tcos(t), s1 = tsin(t);
    T c = 1, s = 0;
    f = b[0];
    df = 0;
    for (std::size_t j = 1; j < n; ++j) {
      const T cn = c * c1 - s * s1;
      s = s * c1 + c * s1;
      c = cn;
      f += b[j] * c;
      df -= static_cast<T>(static_cast<long>(j)) * b[j] * s;
    }
  };
  T t = (lo + hi) / 2;
  for (int it = 0; it < 400 && hi - lo > tol; ++it) {
    T f, df;
    eval(t, f, df);
    const int s = f > 0 ? 1 : (f < 0 ? -1 : 0);
    if (s == 0) return t;
    if (s == sign_lo) {
      lo = t;
    } else {
      hi = t;
    }
    T next = t - f / df;
    if (df == 0 || !(next > lo && next < hi)) next = (lo + hi) / 2;
    const T step = next > t ? next - t : t - next;
    if (step < tol) return next;
    t = next;
  }
  return (lo + hi) / 2;
}

constexpr int kGridBits = 70;

bool encloses(const IntPoly& g, const Integer& center, RootInterval& iv) {
  const Integer scale = Integer(1) << kGridBits;
  iv = {Rational(center - 16, scale), Rational(center + 16, scale), 1};
  iv.lo.canonicalize();
  iv.hi.canonicalize();
  if (iv.lo <= -1 || iv.hi >= 1) return false;
  const int slo = g.sign_at(iv.lo), shi = g.sign_at(iv.hi);
  return slo != 0 && shi != 0 && slo != shi;
}

}  // namespace

std::vector<RootInterval> isolate_subdivision(const IntPoly& g) {
  std::vector<RootInterval> out;
  if (g.is_zero() || *g.degree() == 0) return out;
  const int sign_plus = g.sign_at(Rational(1));
  const int sign_minus = g.sign_at(Rational(-1));
  if (sign_plus == 0 || sign_minus == 0) throw PreconditionError("isolate_subdivision: root at +-1");

  const ChebyshevForm form = monomial_to_chebyshev(g);
  const TrigForm trig(form);
  Subdivider sub(trig);
  // t = 0 is x = 1 and t = pi is x = -1.
  const Float pi = 3.141592653589793238462643383279502884L;
  const std::size_t n = *g.degree();
  const std::size_t pieces = 2 * n + 2;
  Float prev = 0;
  int prev_sign = sign_plus;
  for (std::size_t i = 1; i <= pieces; ++i) {
    Float next = pi * static_cast<Float>(i) / static_cast<Float>(pieces);
    int next_sign = sign_minus;
    if (i < pieces) {
      // Irregular offsets keep grid points away from rational multiples of pi.
      next += (pi / static_cast<Float>(pieces)) * 0.0731L;
      Float v = trig.value(next);
      for (int k = 1; std::fabs(v) <= trig.err0_; ++k) {
        if (k > 16) throw CertificationError("isolate_subdivision: grid point on a root");
        next += (pi / static_cast<Float>(pieces)) * 0.0173L;
        v = trig.value(next);
      }
      next_sign = v > 0 ? 1 : -1;
    }
    sub.run(prev, prev_sign, next, next_sign, 0);
    prev = next;
    prev_sign = next_sign;
  }

  // Quad precision first; multiprecision only when the exact check rejects it.
  std::vector<Quad> bq(form.cheb.size());
  for (std::size_t j = 0; j < bq.size(); ++j) bq[j] = scaled_to_quad(form.cheb[j], form.shift);
  std::vector<Real> br;
  for (const Cell& cell : sub.cells_) {
    // The long double cell endpoints are exact in both wider formats.
    const Quad tq = polish_zero<Quad>(bq, cell.lo, cell.hi, cell.sign_lo, 0x1p-108Q);
    RootInterval iv;
    if (!encloses(g, scaled_round(cosq(tq), kGridBits), iv)) {
      if (br.empty()) {
        br.resize(form.cheb.size());
        for (std::size_t j = 0; j < br.size(); ++j) {
          br[j] = ldexp(to_real<Real>(form.cheb[j]), static_cast<int>(-form.shift));
        }
      }
      const Real tr = polish_zero<Real>(br, Real(cell.lo), Real(cell.hi), cell.sign_lo, ldexp(Real(1), -200));
      if (!encloses(g, scaled_round(cos(tr), kGridBits), iv)) {
        throw CertificationError("isolate_subdivision: exact sign verification failed");
      }
    }
    out.push_back(iv);
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1].hi >= out[i].lo) throw CertificationError("isolate_subdivision: overlapping enclosures");
  }
  return out;
}

}  // namespace unimodal::detail
