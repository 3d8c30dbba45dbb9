#include "unimodal/machinery.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <boost/math/constants/constants.hpp>

#include "unimodal/zerocount.hpp"

namespace unimodal {

namespace {

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

// Moves open endpoints that hit a root of g (only possible at +-1) inward
// while keeping exactly one root of the square-free part inside.
void clear_endpoints(const IntPoly& g, const IntPoly& squarefree, RootInterval& iv) {
  if (g.sign_at(iv.lo) != 0 && g.sign_at(iv.hi) != 0) return;
  Rational inset = (iv.hi - iv.lo) / 4;
  for (int step = 0; step < 4096; ++step, inset /= 2) {
    Rational lo = g.sign_at(iv.lo) == 0 ? Rational(iv.lo + inset) : iv.lo;
    Rational hi = g.sign_at(iv.hi) == 0 ? Rational(iv.hi - inset) : iv.hi;
    lo.canonicalize();
    hi.canonicalize();
    if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) continue;
    if (count_roots_in(squarefree, lo, hi) == 1) {
      iv.lo = lo;
      iv.hi = hi;
      return;
    }
  }
  throw CertificationError("sign_change_points: cannot separate a root from the interval ends");
}

// Bisection on g, which changes sign across the single root in (lo, hi).
void refine(const IntPoly& g, RootInterval& iv, const Rational& target_width) {
  if (iv.lo == iv.hi) return;
  const int s_lo = g.sign_at(iv.lo);
  while (iv.hi - iv.lo >= target_width) {
    const Rational mid = midpoint(iv.lo, iv.hi);
    const int s = g.sign_at(mid);
    if (s == 0) {
      iv.lo = iv.hi = mid;
      return;
    }
    if (s == s_lo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
}

Rational pow2(long e) {
  Rational r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

struct SignChanges {
  IntPoly g;
  std::vector<RootInterval> intervals;  // increasing x, odd multiplicity only
};

SignChanges odd_interior_roots(const CosPoly& t) {
  if (t.is_zero()) throw PreconditionError("sign_change_points: T = 0");
  SignChanges out;
  out.g = to_chebyshev_algebraic(t);
  const ZeroReport report = zero_report(t);
  IntPoly squarefree;
  for (const auto& iv : report.interior) {
    if (iv.multiplicity % 2 == 0) continue;
    RootInterval r = iv;
    if (out.g.sign_at(r.lo) == 0 || out.g.sign_at(r.hi) == 0) {
      if (squarefree.is_zero()) squarefree = divide_exact(out.g, gcd(out.g, out.g.derivative()));
      clear_endpoints(out.g, squarefree, r);
    }
    out.intervals.push_back(r);
  }
  return out;
}

AngleEnclosure to_angle(const RootInterval& iv) {
  AngleEnclosure a;
  a.x_lo = iv.lo;
  a.x_hi = iv.hi;
  a.multiplicity = iv.multiplicity;
  const RealWide slack = boost::multiprecision::pow(RealWide(2), -1000);
  a.t_lo = boost::multiprecision::acos(to_real<RealWide>(iv.hi)) - slack;
  a.t_hi = boost::multiprecision::acos(to_real<RealWide>(iv.lo)) + slack;
  return a;
}

// Refines until the x-width is below 2^-x_bits and the t-width below 2^-60.
std::vector<AngleEnclosure> enclosures(SignChanges& sc, long x_bits) {
  const Rational target = pow2(-x_bits);
  const RealWide t_target = boost::multiprecision::pow(RealWide(2), -60);
  std::vector<AngleEnclosure> out;
  // Increasing t is decreasing x.
  for (auto it = sc.intervals.rbegin(); it != sc.intervals.rend(); ++it) {
    Rational width = target;
    for (;;) {
      refine(sc.g, *it, width);
      AngleEnclosure a = to_angle(*it);
      if (a.t_hi - a.t_lo < t_target) {
        out.push_back(std::move(a));
        break;
      }
      width /= 1024;
    }
  }
  return out;
}

template <class R>
R cos_sum(const std::vector<R>& c, const R& cos_t) {
  // Clenshaw for sum c_j T_j(x).
  R b1 = 0, b2 = 0;
  for (std::size_t j = c.size(); j-- > 1;) {
    const R b = 2 * cos_t * b1 - b2 + c[j];
    b2 = b1;
    b1 = b;
  }
  return cos_t * b1 - b2 + (c.empty() ? R(0) : c[0]);
}

template <class R>
CompanionPoly companion_at(const CosPoly& t, SignChanges& sc) {
  constexpr long bits = std::numeric_limits<R>::digits;
  CompanionPoly out;
  out.roots = enclosures(sc, std::max<long>(bits + 16, 60));
  out.d = static_cast<unsigned>(out.roots.size());
  out.precision_bits = static_cast<unsigned>(bits);

  std::vector<R> q{R(1)};
  for (const auto& root : out.roots) {
    const R x = to_real<R>(midpoint(root.x_lo, root.x_hi));
    std::vector<R> next(q.size() + 2, R(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k] += q[k];
      next[k + 1] -= 2 * x * q[k];
      next[k + 2] += q[k];
    }
    q = std::move(next);
  }

  R deviation = 0;
  for (std::size_t k = 0; k < q.size(); ++k) deviation = std::max(deviation, R(abs(q[k] - q[q.size() - 1 - k])));
  deviation = std::max(deviation, R(abs(q.front() - 1)));
  out.palindrome_deviation = static_cast<double>(deviation);

  // e^{-idt} Q(e^{it}) = q_d + 2 sum_{k>=1} q_{d+k} cos(kt) for palindromic Q.
  std::vector<R> qcos(out.d + 1);
  for (std::size_t k = 0; k <= out.d; ++k) {
    qcos[k] = k == 0 ? q[out.d] : q[out.d + k] + q[out.d - k];
  }
  std::vector<R> tc(t.coeffs().size());
  R t_max = 0, q_max = 0;
  for (std::size_t j = 0; j < tc.size(); ++j) {
    tc[j] = to_real<R>(t.coeff(j));
    t_max = std::max(t_max, R(abs(tc[j])));
  }
  for (const auto& v : q) q_max = std::max(q_max, R(abs(v)));

  out.grid = 64 * (*t.degree() + 2 * out.d);
  if (out.grid == 0) out.grid = 64;
  const R pi = boost::math::constants::pi<R>();
  std::vector<R> product(out.grid + 1);
  R weighted = 0;
  for (std::size_t i = 0; i <= out.grid; ++i) {
    const R x = cos(pi * i / out.grid);
    product[i] = cos_sum(tc, x) * cos_sum(qcos, x);
    weighted += product[i];
  }
  out.sign_p = weighted < 0 ? 1 : 0;
  R lowest = 0;
  for (std::size_t i = 0; i <= out.grid; ++i) {
    const R v = out.sign_p ? R(-product[i]) : product[i];
    if (i == 0 || v < lowest) lowest = v;
  }
  out.min_validation = static_cast<double>(lowest);
  const R tolerance = R(1e-20) * t_max * q_max;

  out.coeffs.reserve(q.size());
  for (const auto& v : q) out.coeffs.emplace_back(v);
  if (lowest < -tolerance || deviation >= R(1e-25)) {
    throw CertificationError("companion: sign validation failed at " + std::to_string(bits) + " bits");
  }
  return out;
}

}  // namespace

Integer lcm_upto(unsigned m) {
  Integer l = 1;
  for (unsigned j = 2; j <= m; ++j) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), j);
  if (m >= 1) {
    Integer bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 3, m);
    if (l >= bound) throw CertificationError("lcm_upto: d_m >= 3^m at m = " + std::to_string(m));
  }
  return l;
}

std::vector<AngleEnclosure> sign_change_points(const CosPoly& t) {
  SignChanges sc = odd_interior_roots(t);
  return enclosures(sc, 60);
}

CompanionPoly companion(const CosPoly& t) {
  SignChanges sc = odd_interior_roots(t);
  try {
    return companion_at<Real>(t, sc);
  } catch (const CertificationError&) {
    return companion_at<RealWide>(t, sc);
  }
}

unsigned companion_order(unsigned d) {
  if (d == 0) return 0;
  const Real x = 32 * Real(d) * log(log(Real(2 * d + 3)));
  return static_cast<unsigned>(floor(x));
}

FProduct build_F(const IntPoly& p, const Integer& degree_budget) {
  const CosPoly t = to_cosine(p);
  if (t.is_zero()) throw PreconditionError("build_F: P = 0");
  FProduct f;
  f.d = static_cast<unsigned>(zero_report(t).nz_star / 2);
  f.m = companion_order(f.d);
  if (f.m > 4096) throw BudgetExceeded("build_F: m = " + std::to_string(f.m));
  f.d_m = lcm_upto(f.m);
  if (f.d_m > degree_budget) {
    throw BudgetExceeded("build_F: d_m = " + f.d_m.get_str() + " exceeds the degree budget");
  }
  f.q = companion(t);
  if (f.q.d != f.d) throw CertificationError("build_F: sign-change count mismatch");
  const std::size_t dm = f.d_m.get_ui();

  std::map<std::size_t, Integer> integer_part;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Integer& a = p.coeffs()[i];
    if (a == 0) continue;
    integer_part[i] += a;
    integer_part[i + dm] -= 2 * a;
    integer_part[i + 2 * dm] += a;
  }
  std::erase_if(integer_part, [](const auto& kv) { return kv.second == 0; });
  f.integer_part_nc = integer_part.size();

  std::map<std::size_t, RealWide> terms;
  for (const auto& [e, a] : integer_part) {
    const RealWide av = to_real<RealWide>(a);
    for (std::size_t k = 0; k < f.q.coeffs.size(); ++k) terms[e + k] += av * f.q.coeffs[k];
  }
  const RealWide threshold(f.zero_threshold);
  for (auto& [e, v] : terms) {
    if (abs(v) < threshold) {
      ++f.near_zero;
    } else {
      f.terms.emplace_back(e, std::move(v));
    }
  }
  return f;
}

namespace {

Integer run_bound(const FProduct& f, const CoeffSet& s) {
  Integer base = static_cast<unsigned long>(s.size() + 2);
  Integer b;
  mpz_pow_ui(b.get_mpz_t(), base.get_mpz_t(), 4 * f.m + 2);
  return b + 6 * f.d + 3;
}

std::string sci(const RealWide& x) { return x.str(12, std::ios_base::scientific); }

}  // namespace

BoundCheck verify_small_runs(const FProduct& f, const CoeffSet& s) {
  const RealWide four_m = 4 * to_real<RealWide>(s.max_abs());
  const RealWide width = 2 * RealWide(f.d) + 1;
  const RealWide tau = pow(four_m, -2 * RealWide(f.d)) * pow(width, -RealWide(f.d) - RealWide(0.5));
  std::size_t longest = 0;
  bool any = false;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= f.terms.size(); ++i) {
    const bool small = i < f.terms.size() && abs(f.terms[i].second) < tau;
    if (small && (i == 0 || abs(f.terms[i - 1].second) >= tau)) start = i;
    if (small) {
      any = true;
      longest = std::max(longest, i - start);
    }
  }
  const Integer bound = run_bound(f, s);
  BoundCheck c;
  c.lhs = std::to_string(longest);
  c.rhs = bound.get_str();
  c.pass = Integer(static_cast<unsigned long>(longest)) < bound;
  c.note = (any ? "small run found" : "no small coefficients") + std::string(", threshold ") + sci(tau) +
           ", near-zero dropped " + std::to_string(f.near_zero);
  return c;
}

BoundCheck verify_term_count(const FProduct& f, const CoeffSet& s) {
  const RealWide four_m = 4 * to_real<RealWide>(s.max_abs());
  const RealWide d(f.d);
  const RealWide rhs = 60 * pow(four_m, 2 * d + 1) * pow(2 * d + 1, d + RealWide(1.5)) *
                       to_real<RealWide>(run_bound(f, s));
  const RealWide lhs = f.terms.empty() ? RealWide(0) : log(RealWide(f.terms.size()));
  BoundCheck c;
  c.lhs = sci(lhs);
  c.rhs = sci(rhs);
  c.pass = lhs <= rhs;
  c.note = "q = " + std::to_string(f.terms.size()) + ", near-zero dropped " + std::to_string(f.near_zero) +
           " at threshold 1e-30";
  return c;
}

NcPhReport nc_ph_bound(const IntPoly& p, const IntPoly& r, const CoeffSet& s, std::optional<std::size_t> nu,
                       const Integer& degree_budget) {
  if (r.is_zero()) throw PreconditionError("nc_ph_bound: R = 0");
  if (p.is_zero()) throw PreconditionError("nc_ph_bound: P = 0");
  NcPhReport out;
  const std::size_t nc_pr = nc(mul(p, r));
  out.nu = nu.value_or(nc_pr);
  if (out.nu < nc_pr) throw PreconditionError("nc_ph_bound: nu below NC(P R)");
  out.u = *r.degree();
  out.v = static_cast<unsigned>(floor(16 * Real(out.u) * log(log(Real(out.u + 3)))));
  if (out.v > 4096) {
    out.skipped = true;
    out.reason = "v = " + std::to_string(out.v) + " beyond the degree budget";
    return out;
  }
  out.k = lcm_upto(out.v);
  if (out.k > degree_budget) {
    out.skipped = true;
    out.reason = "k = " + out.k.get_str() + " beyond the degree budget";
    return out;
  }
  out.nc_ph = nc_shift_diff(p, out.k.get_ui());
  Integer s_pow;
  const Integer base = static_cast<unsigned long>(s.size());
  mpz_pow_ui(s_pow.get_mpz_t(), base.get_mpz_t(), out.u + 1);
  out.mu = Integer(static_cast<unsigned long>(out.nu + 1)) *
           (out.k + s_pow + 3 * static_cast<unsigned long>(out.u + 1) + 2);
  out.pass = Integer(static_cast<unsigned long>(out.nc_ph)) <= out.mu;
  return out;
}

namespace {

double log_abs(const Integer& x) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

BoundRow theorem_bound_report(const IntPoly& p, double epsilon, const std::string& poly_id) {
  if (!(epsilon > 0 && epsilon < 1)) throw PreconditionError("theorem_bound_report: epsilon outside (0, 1)");
  if (p.is_zero() || !is_self_reciprocal(p)) throw PreconditionError("theorem_bound_report: P not self-reciprocal");
  BoundRow row;
  row.poly_id = poly_id;
  row.degree = *p.degree();
  row.epsilon = epsilon;
  row.abs_p1 = abs(p.eval(1));
  row.nz = nz_unimodular(p);
  const IntPoly even = row.degree % 2 == 0 ? p : mul(p, IntPoly{1, 1});
  row.nz_star = zero_report(to_cosine(even)).nz_star;
  row.nc_1 = nc_k(p, 1);
  row.nc_2 = nc_k(p, 2);
  row.nc_3 = nc_k(p, 3);
  if (row.abs_p1 > 1) {
    const double l1 = log_abs(row.abs_p1);
    if (l1 > 1) {
      const double l3 = std::log(std::log(l1));
      if (l3 > 0) row.bound_value = std::pow(l3, 1 - epsilon);
    }
  }
  return row;
}

std::string scatter_header() { return "poly_id,degree,abs_P1,nz,nz_star,epsilon,bound_value,nc_1,nc_2,nc_3"; }

std::string scatter_row(const BoundRow& row) {
  char eps[32], bound[32];
  std::snprintf(eps, sizeof eps, "%.12g", row.epsilon);
  if (row.bound_value) {
    std::snprintf(bound, sizeof bound, "%.12g", *row.bound_value);
  } else {
    std::snprintf(bound, sizeof bound, "NA");
  }
  std::string id = row.poly_id;
  if (id.find_first_of(",\"\n\r") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : id) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    id = quoted + "\"";
  }
  return id + "," + std::to_string(row.degree) + "," + row.abs_p1.get_str() + "," + std::to_string(row.nz) + "," +
         std::to_string(row.nz_star) + "," + eps + "," + bound + "," + std::to_string(row.nc_1) + "," +
         std::to_string(row.nc_2) + "," + std::to_string(row.nc_3);
}

std::vector<std::uint64_t> totient_table(std::uint64_t n) {
  std::vector<std::uint64_t> phi(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) phi[i] = i;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (phi[i] != i) continue;
    for (std::uint64_t j = i; j <= n; j += i) phi[j] -= phi[j] / i;
  }
  return phi;
}

namespace {

bool totient_holds(std::uint64_t n, std::uint64_t phi) {
  const double nd = static_cast<double>(n);
  return static_cast<double>(phi) * 8 * std::log(std::log(nd)) >= nd;
}

}  // namespace

bool totient_check(std::uint64_t n) {
  if (n <= 3) throw PreconditionError("totient_check: n must exceed 3");
  std::uint64_t phi = n, rest = n;
  for (std::uint64_t f = 2; f * f <= rest; ++f) {
    if (rest % f) continue;
    while (rest % f == 0) rest /= f;
    phi -= phi / f;
  }
  if (rest > 1) phi -= phi / rest;
  return totient_holds(n, phi);
}

std::optional<std::uint64_t> totient_sweep(std::uint64_t lo, std::uint64_t hi) {
  if (lo <= 3) throw PreconditionError("totient_sweep: n must exceed 3");
  const auto phi = totient_table(hi);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (!totient_holds(n, phi[n])) return n;
  }
  return std::nullopt;
}

}  // namespace unimodal
