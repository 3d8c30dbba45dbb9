#include "unimodal/zerocount.hpp"

#include <algorithm>

namespace unimodal {

// ---------------------------------------------------------------- Sturm

namespace {

// Division by the positive content keeps every sign of the chain intact.
IntPoly divide_by_content(const IntPoly& p, const Integer& c) {
  std::vector<Integer> scaled(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : scaled) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(scaled));
}

}  // namespace

SturmChain::SturmChain(const IntPoly& g) {
  if (g.is_zero()) throw PreconditionError("SturmChain: zero polynomial");
  polys_.push_back(divide_by_content(g, g.content()));
  const IntPoly d = g.derivative();
  if (d.is_zero()) return;
  polys_.push_back(divide_by_content(d, d.content()));
  while (true) {
    const IntPoly& a = polys_[polys_.size() - 2];
    const IntPoly& b = polys_.back();
    IntPoly r = -positive_pseudo_remainder(a, b);
    if (r.is_zero()) break;
    polys_.push_back(divide_by_content(r, r.content()));
  }
}

std::size_t SturmChain::variations(const Rational& x) const {
  std::size_t v = 0;
  int last = 0;
  for (const auto& p : polys_) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t SturmChain::count(const Rational& lo, const Rational& hi) const {
  const std::size_t vlo = variations(lo);
  const std::size_t vhi = variations(hi);
  return vlo >= vhi ? vlo - vhi : 0;
}

// ---------------------------------------------------------------- square-free

std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& g) {
  if (g.is_zero()) throw PreconditionError("squarefree_decompose: zero polynomial");
  const IntPoly p = g.primitive_part();
  std::vector<SquarefreeFactor> out;
  if (*p.degree() == 0) return out;
  // Musser: c = gcd(p, p'), w = p / c; peel one multiplicity per round.
  IntPoly c = gcd(p, p.derivative());
  IntPoly w = divide_exact(p, c);
  unsigned i = 1;
  while (*w.degree() > 0) {
    IntPoly y = gcd(w, c);
    IntPoly z = divide_exact(w, y);
    if (*z.degree() > 0) out.push_back({z, i});
    ++i;
    w = std::move(y);
    c = divide_exact(c, w);
  }
  return out;
}

std::size_t count_roots_in(const IntPoly& g, const Rational& lo, const Rational& hi) {
  if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) {
    throw PreconditionError("count_roots_in: polynomial vanishes at an endpoint; nudge the endpoint");
  }
  if (lo >= hi) return 0;
  return SturmChain(g).count(lo, hi);
}

// ---------------------------------------------------------------- reports

namespace {

const IntPoly kXMinus1{-1, 1};
const IntPoly kXPlus1{1, 1};

unsigned strip_root(IntPoly& g, const Integer& root, const IntPoly& linear) {
  unsigned m = 0;
  while (*g.degree() > 0 && g.eval(root) == 0) {
    g = divide_exact(g, linear);
    ++m;
  }
  return m;
}

void refine_halve(RootInterval& r, const IntPoly& f) {
  Rational mid = (r.lo + r.hi) / 2;
  const int s = f.sign_at(mid);
  if (s == 0) {
    const Rational eps = (r.hi - r.lo) / 8;
    r.lo = mid - eps;
    r.hi = mid + eps;
    return;
  }
  if (s == f.sign_at(r.lo)) {
    r.lo = mid;
  } else {
    r.hi = mid;
  }
}

}  // namespace

ZeroReport zero_report(const CosPoly& t, const ZeroCountOptions& options) {
  if (t.is_zero()) throw PreconditionError("zero_report: zero cosine polynomial");
  IntPoly g = to_chebyshev_algebraic(t).primitive_part();
  ZeroReport report;
  report.mult_at_plus1 = strip_root(g, 1, kXMinus1);
  report.mult_at_minus1 = strip_root(g, -1, kXPlus1);

  struct Located {
    RootInterval interval;
    const IntPoly* factor;
  };
  std::vector<SquarefreeFactor> factors;
  if (*g.degree() > 0) {
    if (detail::squarefree_mod_p(g)) {
      factors.push_back({g, 1});
    } else {
      factors = squarefree_decompose(g);
    }
  }
  std::vector<Located> roots;
  for (const auto& f : factors) {
    const bool use_sturm =
        options.method == IsolationMethod::Sturm ||
        (options.method == IsolationMethod::Automatic && *f.factor.degree() <= options.sturm_degree_limit);
    auto intervals = use_sturm ? detail::isolate_sturm(f.factor) : detail::isolate_subdivision(f.factor);
    for (auto& iv : intervals) {
      iv.multiplicity = f.multiplicity;
      roots.push_back({iv, &f.factor});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Located& a, const Located& b) { return a.interval.lo < b.interval.lo; });
  // Roots of different factors are distinct; refine until the enclosures separate.
  for (std::size_t i = 1; i < roots.size(); ++i) {
    int guard = 0;
    while (roots[i - 1].interval.hi >= roots[i].interval.lo) {
      if (++guard > 4096) throw CertificationError("zero_report: could not separate root intervals");
      refine_halve(roots[i - 1].interval, *roots[i - 1].factor);
      refine_halve(roots[i].interval, *roots[i].factor);
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Located& a, const Located& b) { return a.interval.lo < b.interval.lo; });

  std::uint64_t interior_mult = 0;
  for (const auto& r : roots) {
    report.interior.push_back(r.interval);
    interior_mult += r.interval.multiplicity;
    if (r.interval.multiplicity % 2 == 1) report.nz_star += 2;
  }
  report.nz = 2 * interior_mult + 2ULL * report.mult_at_plus1 + 2ULL * report.mult_at_minus1;
  return report;
}

std::uint64_t nz_unimodular(const IntPoly& p, const ZeroCountOptions& options) {
  if (p.is_zero()) throw PreconditionError("nz_unimodular: zero polynomial");
  if (!is_self_reciprocal(p)) throw PreconditionError("nz_unimodular: polynomial is not self-reciprocal");
  const std::size_t n = *p.degree();
  if (n == 0) return 0;
  if (n % 2 == 0) return zero_report(to_cosine(p), options).nz;
  const IntPoly lifted = p * kXPlus1;
  return zero_report(to_cosine(lifted), options).nz - 1;
}

UnimodularCount nz_unimodular_any(const IntPoly& p, const ZeroCountOptions& options) {
  if (p.is_zero()) throw PreconditionError("nz_unimodular_any: zero polynomial");
  const IntPoly q = p.shift_down(p.low_order());
  if (*q.degree() == 0) return {0, Reduction::SelfReciprocal};
  if (is_self_reciprocal(q)) return {nz_unimodular(q, options), Reduction::SelfReciprocal};
  if (is_anti_reciprocal(q)) {
    const IntPoly reduced = divide_exact(q, kXMinus1);
    return {1 + nz_unimodular(reduced, options), Reduction::AntiReciprocal};
  }
  const IntPoly product = q * q.reversed();
  return {nz_unimodular(product, options) / 2, Reduction::ReciprocalProduct};
}

}  // namespace unimodal
