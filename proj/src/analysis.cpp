#include "unimodal/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/minima.hpp>

#include "unimodal/zerocount.hpp"

namespace unimodal {

// ---------------------------------------------------------------- ExpSum

ExpSum::ExpSum(std::vector<Term> terms) {
  std::map<long, std::complex<double>> merged;
  for (const auto& t : terms) merged[t.frequency] += t.coeff;
  for (const auto& [freq, coeff] : merged) {
    if (coeff != 0.0) terms_.push_back({freq, coeff});
  }
}

std::complex<double> ExpSum::eval(double t) const {
  std::complex<double> sum = 0;
  for (const auto& term : terms_) sum += term.coeff * std::polar(1.0, static_cast<double>(term.frequency) * t);
  return sum;
}

long ExpSum::max_frequency() const {
  long m = 0;
  for (const auto& term : terms_) m = std::max(m, std::labs(term.frequency));
  return m;
}

// ---------------------------------------------------------------- quadrature

namespace {

using Rule = boost::math::quadrature::gauss<double, 10>;

double gauss10(const std::function<double(double)>& f, double a, double b) {
  const double c = (a + b) / 2, h = (b - a) / 2;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  double sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      sum += w[i] * f(c);
    } else {
      sum += w[i] * (f(c + h * x[i]) + f(c - h * x[i]));
    }
  }
  return sum * h;
}

struct Adaptive {
  const std::function<double(double)>& f;
  double tol_per_unit;
  int max_depth;
  double value = 0;
  double error = 0;

  void panel(double a, double b, double coarse, int depth) {
    const double m = (a + b) / 2;
    const double left = gauss10(f, a, m);
    const double right = gauss10(f, m, b);
    const double fine = left + right;
    const double err = std::fabs(fine - coarse);
    if (err <= tol_per_unit * (b - a) || depth >= max_depth) {
      value += fine;
      error += err;
      return;
    }
    panel(a, m, left, depth + 1);
    panel(m, b, right, depth + 1);
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double frequency,
                           const QuadratureOptions& options) {
  if (!(b > a)) return {0, 0};
  const double width = b - a;
  const auto panels = static_cast<std::size_t>(std::ceil(std::max(1.0, frequency) * width / M_PI)) + 4;
  const double h = width / static_cast<double>(panels);
  std::vector<double> coarse(panels);
  double estimate = 0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = a + h * static_cast<double>(i);
    coarse[i] = gauss10(f, lo, i + 1 == panels ? b : lo + h);
    estimate += coarse[i];
  }
  // Tolerance set from the first-pass magnitude, spread uniformly over [a, b].
  const double target = options.relative_tolerance * (1 + std::fabs(estimate)) / 4;
  Adaptive run{f, target / width, options.max_depth};
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = a + h * static_cast<double>(i);
    run.panel(lo, i + 1 == panels ? b : lo + h, coarse[i], 0);
  }
  return {run.value, run.error};
}

QuadratureResult l1_circle(const ExpSum& f, const QuadratureOptions& options) {
  if (f.empty()) throw PreconditionError("l1_circle: empty exponential sum");
  long span = 0;
  if (!f.terms().empty()) span = f.terms().back().frequency - f.terms().front().frequency;
  return integrate([&](double t) { return std::abs(f.eval(t)); }, 0, 2 * M_PI, static_cast<double>(span) + 1,
                   options);
}

QuadratureResult l1_arc(const IntPoly& p, double delta, const QuadratureOptions& options) {
  std::vector<double> a(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) a[i] = p.coeff(i).get_d();
  auto value = [&](double t) {
    const std::complex<double> z = std::polar(1.0, t);
    std::complex<double> acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
    return std::abs(acc);
  };
  return integrate(value, -delta, delta, static_cast<double>(p.size()), options);
}

// ---------------------------------------------------------------- L1 bounds

LittlewoodBoundReport check_littlewood_bound(const ExpSum& f, const QuadratureOptions& options) {
  LittlewoodBoundReport r;
  const QuadratureResult q = l1_circle(f, options);
  r.lhs = q.value;
  r.error_bound = q.error_bound;
  double gamma = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < f.terms().size(); ++j) {
    const double mod = std::abs(f.terms()[j].coeff);
    r.rhs_harmonic += mod / static_cast<double>(j + 1);
    gamma = std::min(gamma, mod);
  }
  r.rhs_harmonic /= 30;
  r.rhs_log = gamma / 30 * std::log(static_cast<double>(f.terms().size()));
  r.margin_harmonic = r.lhs - r.rhs_harmonic - r.error_bound;
  r.margin_log = r.lhs - r.rhs_log - r.error_bound;
  return r;
}

std::optional<Integer> window_sum_gap(const CoeffSet& s, std::size_t k) {
  std::set<Integer> sums{0};
  for (std::size_t step = 0; step < k; ++step) {
    std::set<Integer> next = sums;
    for (const auto& x : sums) {
      for (const auto& e : s.elements()) next.insert(x + e);
    }
    sums = std::move(next);
  }
  std::optional<Integer> best;
  for (const auto& x : sums) {
    if (x == 0) continue;
    const Integer m = abs(x);
    if (!best || m < *best) best = m;
  }
  return best;
}

ArcL1Report check_arc_l1_bound(const IntPoly& p, const CoeffSet& s, std::size_t k, double delta,
                              std::optional<std::uint64_t> mu, const QuadratureOptions& options) {
  if (!(delta > 0 && delta < M_PI)) throw PreconditionError("check_arc_l1_bound: delta must lie in (0, pi)");
  ArcL1Report r;
  const std::uint64_t measured = nc_shift_diff(p, k);
  if (mu && *mu < measured) throw PreconditionError("check_arc_l1_bound: mu is below NC(P (z^k - 1))");
  r.mu = mu.value_or(measured);
  r.nc_k = nc_k(p, k);
  const auto gamma = window_sum_gap(s, k);
  if (!gamma) {
    r.degenerate = true;
    r.pass = true;
    return r;
  }
  const QuadratureResult q = l1_arc(p, delta, options);
  r.lhs = q.value;
  r.error_bound = q.error_bound;
  const double log_nc = r.nc_k == 0 ? -std::numeric_limits<double>::infinity()
                                    : std::log(static_cast<double>(r.nc_k));
  r.rhs = gamma->get_d() / 30 * log_nc - M_PI * M_PI * static_cast<double>(r.mu) * s.max_abs().get_d() / delta;
  r.margin = r.lhs - r.rhs + r.error_bound;
  r.pass = r.margin > 0;
  return r;
}

// ---------------------------------------------------------------- antiderivative

namespace {

double antiderivative(const CosPoly& t, double x) {
  double v = t.coeff(0).get_d() * x;
  const std::size_t n = t.degree().value_or(0);
  for (std::size_t j = 1; j <= n; ++j) {
    const double c = t.coeff(j).get_d();
    if (c != 0) v += c / static_cast<double>(j) * std::sin(static_cast<double>(j) * x);
  }
  return v;
}

std::size_t sample_count(const CosPoly& t) { return std::max<std::size_t>(1024, 64 * (t.degree().value_or(0) + 1)); }

}  // namespace

double antiderivative_max(const CosPoly& t, double delta) {
  if (!(delta > 0)) throw PreconditionError("antiderivative_max: delta must be positive");
  if (t.is_zero()) return 0;
  // R is odd, so the maximum of |R| over [-delta, delta] is attained on [0, delta].
  const std::size_t g = sample_count(t);
  std::vector<double> xs(g + 1), vs(g + 1);
  for (std::size_t i = 0; i <= g; ++i) {
    xs[i] = delta * static_cast<double>(i) / static_cast<double>(g);
    vs[i] = std::fabs(antiderivative(t, xs[i]));
  }
  double best = *std::max_element(vs.begin(), vs.end());
  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i < g; ++i) {
    if (vs[i] >= vs[i - 1] && vs[i] >= vs[i + 1]) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return vs[a] > vs[b]; });
  if (peaks.size() > 16) peaks.resize(16);
  for (std::size_t i : peaks) {
    auto neg = [&](double x) { return -std::fabs(antiderivative(t, x)); };
    const auto found = boost::math::tools::brent_find_minima(neg, xs[i - 1], xs[i + 1], 52);
    best = std::max(best, -found.second);
  }
  return best;
}

AntiderivativeReport check_antiderivative_bound(const IntPoly& p, const CoeffSet& s, std::size_t k, std::optional<double> delta) {
  if (k == 0) throw PreconditionError("check_antiderivative_bound: k must be positive");
  const double d = delta.value_or(1.0 / (2.0 * static_cast<double>(k)));
  if (!(d > 0 && d <= 1.0 / (2.0 * static_cast<double>(k)))) {
    throw PreconditionError("check_antiderivative_bound: delta must lie in (0, 1/(2k)]");
  }
  AntiderivativeReport r;
  r.mu = nc_shift_diff(p, k);
  r.max_abs = antiderivative_max(to_cosine(p), d);
  r.bound = 42.0 * static_cast<double>(k) * static_cast<double>(r.mu + 1) * s.max_abs().get_d();
  r.pass = r.max_abs < r.bound;
  return r;
}

// ---------------------------------------------------------------- level crossings

LevelCrossings best_level_crossings(const std::vector<double>& samples) {
  LevelCrossings out;
  if (samples.empty()) return out;
  // A level strictly between two consecutive samples is one crossing; sweep
  // the open intervals (min, max) for the point of maximal coverage.
  std::vector<std::pair<double, int>> events;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double lo = std::min(samples[i - 1], samples[i]);
    const double hi = std::max(samples[i - 1], samples[i]);
    if (lo < hi) {
      events.emplace_back(lo, +1);
      events.emplace_back(hi, -1);
    }
  }
  if (events.empty()) {
    out.level = samples.front();
    return out;
  }
  // Closing events sort before opening ones at equal coordinates (open intervals).
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::size_t depth = 0;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    depth = static_cast<std::size_t>(static_cast<long>(depth) + events[i].second);
    if (depth > out.crossings && events[i + 1].first > events[i].first) {
      out.crossings = depth;
      out.level = (events[i].first + events[i + 1].first) / 2;
    }
  }
  return out;
}

LevelCrossingReport check_level_crossings(const CosPoly& t, double delta) {
  if (!(delta > 0)) throw PreconditionError("check_level_crossings: delta must be positive");
  LevelCrossingReport r;
  const double n = static_cast<double>(t.degree().value_or(0));
  const QuadratureResult l =
      integrate([&](double x) { return std::fabs(t.eval(x)); }, -delta, delta, n + 1);
  // The upper estimate of L makes the requirement stricter, not looser.
  r.total_variation = l.value + l.error_bound;
  r.max_abs = antiderivative_max(t, delta);
  if (r.max_abs == 0) {
    r.pass = true;
    return r;
  }
  r.required = static_cast<std::size_t>(std::floor(r.total_variation / (2 * r.max_abs)));
  std::size_t grid = 64 * (t.degree().value_or(0) + 1) + 1;
  for (int attempt = 0; attempt < 3; ++attempt, grid = 2 * grid - 1) {
    std::vector<double> samples(grid);
    for (std::size_t i = 0; i < grid; ++i) {
      samples[i] = antiderivative(t, -delta + 2 * delta * static_cast<double>(i) / static_cast<double>(grid - 1));
    }
    r.best = best_level_crossings(samples);
    r.grid = grid;
    if (r.best.crossings >= r.required) {
      r.pass = true;
      break;
    }
  }
  return r;
}

SignChangeReport check_sign_change_bound(const IntPoly& p, const CoeffSet& s, std::size_t k) {
  if (k == 0) throw PreconditionError("check_sign_change_bound: k must be positive");
  SignChangeReport r;
  r.mu = nc_shift_diff(p, k);
  r.nz_star = zero_report(to_cosine(p)).nz_star;
  const auto gamma = window_sum_gap(s, k);
  if (!gamma) {
    r.degenerate = true;
    r.pass = true;
    return r;
  }
  const std::size_t nck = nc_k(p, k);
  const double log_nc = nck == 0 ? -std::numeric_limits<double>::infinity() : std::log(static_cast<double>(nck));
  const double kk = static_cast<double>(k), mu = static_cast<double>(r.mu), m = s.max_abs().get_d();
  r.rhs = (gamma->get_d() / 30 * log_nc - 2 * kk * M_PI * M_PI * mu * m) / (84 * kk * (mu + 1) * m);
  const double d = static_cast<double>(r.nz_star / 2);
  r.variant_slack = 84 * kk * (mu + 1) * kk * m * (2 * d) + 2 * kk * M_PI * M_PI * mu * m - log_nc;
  r.pass = static_cast<double>(r.nz_star) >= r.rhs;
  return r;
}

// ---------------------------------------------------------------- exact linear algebra

SolveBoundReport check_integer_solve_bound(const IntMatrix& a, const std::vector<GaussianRational>& b) {
  const std::size_t d = a.size();
  if (d == 0 || b.size() != d) throw PreconditionError("check_integer_solve_bound: shape mismatch");
  for (const auto& row : a) {
    if (row.size() != d) throw PreconditionError("check_integer_solve_bound: matrix is not square");
  }
  // Gaussian elimination over Q on [A | Re b | Im b].
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 2));
  Integer max_entry = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m[i][j] = a[i][j];
      max_entry = std::max(max_entry, Integer(abs(a[i][j])));
    }
    m[i][d] = b[i].re;
    m[i][d + 1] = b[i].im;
    m[i][d].canonicalize();
    m[i][d + 1].canonicalize();
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    if (pivot == d) throw PreconditionError("check_integer_solve_bound: singular matrix");
    std::swap(m[pivot], m[col]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational factor = m[i][col] / m[col][col];
      for (std::size_t j = col; j < d + 2; ++j) m[i][j] -= factor * m[col][j];
    }
  }
  SolveBoundReport r;
  Rational max_b = 0;
  for (std::size_t i = 0; i < d; ++i) max_b = std::max(max_b, Rational(m[i][d] * m[i][d] + m[i][d + 1] * m[i][d + 1]));
  for (std::size_t i = 0; i < d; ++i) {
    GaussianRational x{m[i][d] / m[i][i], m[i][d + 1] / m[i][i]};
    r.max_x_squared = std::max(r.max_x_squared, Rational(x.re * x.re + x.im * x.im));
    r.solution.push_back(x);
  }
  Integer factor = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) factor *= max_entry * max_entry;
  for (std::size_t i = 0; i < d; ++i) factor *= static_cast<unsigned long>(d);
  r.bound_squared = Rational(factor) * max_b;
  r.pass = r.max_x_squared <= r.bound_squared;
  return r;
}

std::size_t integer_rank(IntMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Integer& p = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = p * rows[i][j] - rows[i][col] * rows[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][col] = 0;
    }
    prev = rows[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t window_rank(const std::vector<Integer>& x, std::size_t window) {
  if (window == 0 || x.size() < window) throw PreconditionError("window_rank: need 1 <= D <= length");
  IntMatrix rows;
  // Duplicate windows add nothing to the span.
  std::set<std::vector<Integer>> seen;
  for (std::size_t r = 0; r + window <= x.size(); ++r) {
    std::vector<Integer> w(x.begin() + static_cast<long>(r), x.begin() + static_cast<long>(r + window));
    if (seen.insert(w).second) rows.push_back(std::move(w));
  }
  return integer_rank(std::move(rows));
}

std::optional<std::size_t> detect_period(const std::vector<Integer>& x, std::size_t max_period) {
  const std::size_t limit = x.empty() ? 0 : std::min(max_period, x.size() - 1);
  for (std::size_t p = 1; p <= limit; ++p) {
    bool ok = true;
    for (std::size_t r = 0; r + p < x.size() && ok; ++r) ok = x[r + p] == x[r];
    if (ok) return p;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- CSV

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_header_check() { return "id,lhs,rhs,margin,pass"; }

std::string csv_row(const CheckRow& row) {
  char buf[128];
  std::snprintf(buf, sizeof buf, ",%.12g,%.12g,%.12g,%s", row.lhs, row.rhs, row.margin, row.pass ? "true" : "false");
  return csv_field(row.id) + buf;
}

}  // namespace unimodal
