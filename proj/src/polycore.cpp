#include "unimodal/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace unimodal {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(std::size_t power, const Integer& coeff) {
  std::vector<Integer> c(power + 1);
  c[power] = coeff;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  // sum a_j num^j den^(n-j), den > 0, has the sign of P(x).
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    if (coeffs_[i] != 0) acc += coeffs_[i] * den_pow;
  }
  return sgn(acc);
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer g = content();
  if (coeffs_.back() < 0) g = -g;
  std::vector<Integer> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

std::size_t IntPoly::low_order() const {
  std::size_t v = 0;
  while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
  return coeffs_.empty() ? 0 : v;
}

IntPoly IntPoly::shift_down(std::size_t v) const {
  if (v >= coeffs_.size()) return {};
  return IntPoly(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(v), coeffs_.end()));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

// ---------------------------------------------------------------- CosPoly

CosPoly::CosPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CosPoly::CosPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void CosPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer CosPoly::value_at_zero() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

double CosPoly::eval(double t) const {
  double s = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) s += coeffs_[j].get_d() * std::cos(static_cast<double>(j) * t);
  }
  return s;
}

CosPoly& CosPoly::operator+=(const CosPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

CosPoly& CosPoly::operator-=(const CosPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

CosPoly& CosPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

// ---------------------------------------------------------------- CoeffSet

CoeffSet::CoeffSet(std::set<Integer> elements) : elements_(std::move(elements)) {
  for (const auto& e : elements_) max_abs_ = std::max<Integer>(max_abs_, abs(e));
}

CoeffSet::CoeffSet(std::initializer_list<long> elements) {
  std::set<Integer> s;
  for (long e : elements) s.emplace(e);
  *this = CoeffSet(std::move(s));
}

CoeffSet CoeffSet::of(const IntPoly& p) {
  std::set<Integer> s(p.coeffs().begin(), p.coeffs().end());
  return CoeffSet(std::move(s));
}

// ---------------------------------------------------------------- predicates

bool is_self_reciprocal(const IntPoly& p) {
  const auto c = p.coeffs();
  for (std::size_t j = 0, n = c.size(); j < n / 2 + 1 && j < n; ++j) {
    if (c[j] != c[n - 1 - j]) return false;
  }
  return true;
}

bool is_skew_reciprocal(const IntPoly& p) {
  const auto c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& mirror = c[n - 1 - j];
    if ((j % 2 == 0 && c[j] != mirror) || (j % 2 == 1 && c[j] != -mirror)) return false;
  }
  return true;
}

bool is_anti_reciprocal(const IntPoly& p) {
  const auto c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (c[j] != -c[n - 1 - j]) return false;
  }
  return true;
}

// ---------------------------------------------------------------- conversions

CosPoly to_cosine(const IntPoly& p) {
  const auto deg = p.degree();
  if (!deg) throw PreconditionError("to_cosine: zero polynomial");
  if (*deg % 2 != 0) throw PreconditionError("to_cosine: odd degree; apply the (z+1) lift first");
  if (!is_self_reciprocal(p)) throw PreconditionError("to_cosine: polynomial is not self-reciprocal");
  const std::size_t n = *deg / 2;
  std::vector<Integer> c(n + 1);
  c[0] = p.coeff(n);
  for (std::size_t j = 1; j <= n; ++j) c[j] = 2 * p.coeff(n + j);
  return CosPoly(std::move(c));
}

IntPoly cosine_to_selfreciprocal(const CosPoly& t) {
  const auto deg = t.degree();
  if (!deg) return {};
  const std::size_t n = *deg;
  std::vector<Integer> a(2 * n + 1);
  a[n] = 2 * t.coeff(0);
  for (std::size_t j = 1; j <= n; ++j) {
    a[n + j] += t.coeff(j);
    a[n - j] += t.coeff(j);
  }
  return IntPoly(std::move(a));
}

IntPoly chebyshev_t(std::size_t j) {
  IntPoly prev{1};
  if (j == 0) return prev;
  IntPoly cur{0, 1};
  const IntPoly two_x{0, 2};
  for (std::size_t i = 1; i < j; ++i) {
    IntPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly to_chebyshev_algebraic(const CosPoly& t) {
  const auto deg = t.degree();
  if (!deg) return {};
  const std::size_t n = *deg;
  std::vector<Integer> g(n + 1);
  // Running T_{j-1}, T_j as dense vectors; T_{j+1} = 2x T_j - T_{j-1}.
  std::vector<Integer> prev{1};
  std::vector<Integer> cur{0, 1};
  g[0] += t.coeff(0);
  if (n >= 1 && t.coeff(1) != 0) g[1] += t.coeff(1);
  for (std::size_t j = 1; j < n; ++j) {
    std::vector<Integer> next(j + 2);
    for (std::size_t i = 0; i <= j; ++i) next[i + 1] = 2 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
    const Integer cj = t.coeff(j + 1);
    if (cj != 0) {
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur[i] != 0) mpz_addmul(g[i].get_mpz_t(), cj.get_mpz_t(), cur[i].get_mpz_t());
      }
    }
  }
  return IntPoly(std::move(g));
}

CosPoly cos_product_doubled(const CosPoly& a, const CosPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(*a.degree() + *b.degree() + 1);
  // 2 cos(it) cos(jt) = cos((i+j)t) + cos(|i-j|t), valid for i or j = 0 too.
  for (std::size_t i = 0; i <= *a.degree(); ++i) {
    const Integer ai = a.coeff(i);
    if (ai == 0) continue;
    for (std::size_t j = 0; j <= *b.degree(); ++j) {
      const Integer bj = b.coeff(j);
      if (bj == 0) continue;
      const Integer prod = ai * bj;
      r[i + j] += prod;
      r[i > j ? i - j : j - i] += prod;
    }
  }
  return CosPoly(std::move(r));
}

// ---------------------------------------------------------------- statistics

std::size_t nc(const IntPoly& p) {
  return static_cast<std::size_t>(
      std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c != 0; }));
}

std::size_t nc_k(const IntPoly& p, std::size_t k) {
  if (k == 0) throw PreconditionError("nc_k: window length must be positive");
  const auto deg = p.degree();
  if (!deg || k > *deg + 1) return 0;
  const auto c = p.coeffs();
  Integer window = 0;
  for (std::size_t i = 0; i < k; ++i) window += c[i];
  std::size_t count = window != 0 ? 1 : 0;
  for (std::size_t u = 1; u + k <= c.size(); ++u) {
    window += c[u + k - 1];
    window -= c[u - 1];
    if (window != 0) ++count;
  }
  return count;
}

IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly shift_diff(const IntPoly& p, std::size_t k) {
  if (k == 0) throw PreconditionError("shift_diff: k must be positive");
  if (p.is_zero()) return {};
  std::vector<Integer> beta(p.size() + k);
  for (std::size_t j = 0; j < p.size(); ++j) {
    beta[j + k] += p.coeff(j);
    beta[j] -= p.coeff(j);
  }
  return IntPoly(std::move(beta));
}

std::size_t nc_shift_diff(const IntPoly& p, std::size_t k) {
  if (k == 0) throw PreconditionError("nc_shift_diff: k must be positive");
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p.coeff(j) != 0) {
      support.push_back(j);
      support.push_back(j + k);
    }
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::size_t count = 0;
  for (std::size_t j : support) {
    const Integer shifted = j >= k ? p.coeff(j - k) : Integer(0);
    if (shifted != p.coeff(j)) ++count;
  }
  return count;
}

// ---------------------------------------------------------------- division

namespace {

// lc(b)^s a = q b + r with s the number of elimination steps.
void pseudo_divide(const IntPoly& a, const IntPoly& b, IntPoly& quotient, IntPoly& remainder,
                   std::size_t& steps) {
  if (b.is_zero()) throw PreconditionError("pseudo_divide: division by zero polynomial");
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = *b.degree();
  const Integer& lc = b.leading();
  std::vector<Integer> q(r.size() >= b.size() ? r.size() - db : 0);
  steps = 0;
  std::size_t top = r.size();
  while (top > 0 && top - 1 >= db) {
    if (r[top - 1] == 0) {
      --top;
      continue;
    }
    const Integer lead = r[top - 1];
    const std::size_t shift = top - 1 - db;
    for (auto& c : r) c *= lc;
    for (auto& c : q) c *= lc;
    q[shift] += lead;
    for (std::size_t i = 0; i <= db; ++i) mpz_submul(r[shift + i].get_mpz_t(), lead.get_mpz_t(), b.coeff(i).get_mpz_t());
    ++steps;
    --top;
  }
  quotient = IntPoly(std::move(q));
  remainder = IntPoly(std::move(r));
}

}  // namespace

IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly q, r;
  std::size_t steps = 0;
  pseudo_divide(a, b, q, r, steps);
  if (b.leading() < 0 && steps % 2 == 1) r = -r;
  return r;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly q, r;
  std::size_t steps = 0;
  pseudo_divide(a, b, q, r, steps);
  if (!r.is_zero()) throw PreconditionError("divide_exact: divisor does not divide dividend");
  return q.primitive_part();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (*x.degree() < *y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = positive_pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace unimodal
