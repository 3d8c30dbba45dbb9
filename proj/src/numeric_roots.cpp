#include "unimodal/numeric_roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unimodal/real.hpp"

namespace unimodal {

namespace {

using cd = std::complex<double>;

// Aberth step size from P'/P, evaluated through the reversed polynomial
// when |z| > 1 to keep the magnitudes in range.
cd newton_ratio(const std::vector<double>& a, cd z) {
  const std::size_t n = a.size() - 1;
  if (std::abs(z) <= 1.0) {
    cd p = a[n], dp = 0;
    for (std::size_t i = n; i-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[i];
    }
    return dp / p;
  }
  const cd w = 1.0 / z;
  cd r = a[0], dr = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    dr = dr * w + r;
    r = r * w + a[i];
  }
  return w * (static_cast<double>(n) - w * dr / r);
}

std::vector<cd> aberth_double(const IntPoly& p) {
  const std::size_t n = *p.degree();
  std::vector<double> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) a[i] = p.coeff(i).get_d();
  const double radius = std::pow(std::fabs(a[0] / a[n]), 1.0 / static_cast<double>(n));
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }
  std::vector<bool> done(n, false);
  for (int it = 0; it < 2000; ++it) {
    bool moving = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const cd ratio = newton_ratio(a, z[k]);
      cd sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      const cd step = 1.0 / (ratio - sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z[k]))) {
        done[k] = true;
      } else {
        moving = true;
      }
    }
    if (!moving) break;
  }
  return z;
}

template <class R>
struct Cx {
  R re, im;
};

template <class R>
Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) { return {a.re + b.re, a.im + b.im}; }
template <class R>
Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) { return {a.re - b.re, a.im - b.im}; }
template <class R>
Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R>
Cx<R> inverse(const Cx<R>& a) {
  const R d = a.re * a.re + a.im * a.im;
  return {a.re / d, -a.im / d};
}
template <class R>
R norm(const Cx<R>& a) { return a.re * a.re + a.im * a.im; }

template <class R>
std::vector<Cx<R>> aberth_refine(const IntPoly& p, const std::vector<cd>& start, int max_iter) {
  const std::size_t n = start.size();
  std::vector<R> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) a[i] = to_real<R>(p.coeff(i));
  std::vector<Cx<R>> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = {R(start[k].real()), R(start[k].imag())};
  const R stop = pow(R(2), -(static_cast<long>(std::numeric_limits<R>::digits) - 8));
  const R stop2 = stop * stop;
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_iter; ++it) {
    bool moving = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      Cx<R> v{a[n], R(0)}, dv{R(0), R(0)};
      for (std::size_t i = n; i-- > 0;) {
        dv = dv * z[k] + v;
        v = v * z[k] + Cx<R>{a[i], R(0)};
      }
      if (v.re == 0 && v.im == 0) {
        done[k] = true;
        continue;
      }
      Cx<R> sum{R(0), R(0)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum = sum + inverse(z[k] - z[j]);
      }
      const Cx<R> step = inverse(dv * inverse(v) - sum);
      z[k] = z[k] - step;
      const R scale = std::max(R(1), norm(z[k]));
      if (norm(step) < stop2 * scale) {
        done[k] = true;
      } else {
        moving = true;
      }
    }
    if (!moving) break;
  }
  return z;
}

struct Tolerances {
  double cluster_radius;
  double circle;
};

template <class R>
std::vector<RootCluster> cluster(const std::vector<Cx<R>>& z, const Tolerances& tol) {
  const std::size_t n = z.size();
  // Single-linkage merge through a union-find over close pairs.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const R r2 = R(tol.cluster_radius) * R(tol.cluster_radius);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norm(z[i] - z[j]) < r2) parent[find(i)] = find(j);
    }
  }
  std::vector<RootCluster> out;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i) == i) roots.push_back(i);
  }
  for (std::size_t root : roots) {
    Cx<R> sum{R(0), R(0)};
    unsigned count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (find(i) == root) {
        sum = sum + z[i];
        ++count;
      }
    }
    const Cx<R> mean{sum.re / count, sum.im / count};
    const R deviation = sqrt(norm(mean)) - 1;
    RootCluster c;
    c.center = {static_cast<double>(mean.re), static_cast<double>(mean.im)};
    c.multiplicity = count;
    c.abs_deviation = static_cast<double>(deviation);
    // A multiple root converges only to about eps^(1/m); clusters are resolved to the merge radius.
    const R circle_tol = R(count > 1 ? std::max(tol.circle, tol.cluster_radius) : tol.circle);
    c.on_unit_circle = abs(deviation) < circle_tol;
    c.on_real_axis = abs(mean.im) < R(tol.circle);
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::vector<RootCluster> numeric_root_clusters(const IntPoly& p, const NumericRootOptions& options) {
  if (p.is_zero()) throw PreconditionError("numeric_root_clusters: zero polynomial");
  const std::size_t v = p.low_order();
  const IntPoly q = p.shift_down(v);
  std::vector<RootCluster> out;
  if (*q.degree() > 0) {
    const auto start = aberth_double(q);
    if (options.precision == OraclePrecision::Oracle) {
      out = cluster(aberth_refine<RealOracle>(q, start, options.max_refine_iterations), {1e-20, 1e-40});
    } else {
      out = cluster(aberth_refine<RealPolish>(q, start, options.max_refine_iterations), {1e-12, 1e-25});
    }
  }
  if (v > 0) {
    RootCluster zero;
    zero.center = 0;
    zero.multiplicity = static_cast<unsigned>(v);
    zero.on_real_axis = true;
    zero.abs_deviation = -1;
    out.push_back(zero);
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
    return a.center.imag() < b.center.imag();
  });
  return out;
}

std::uint64_t numeric_unimodular_count(const IntPoly& p, const NumericRootOptions& options) {
  std::uint64_t count = 0;
  for (const auto& c : numeric_root_clusters(p, options)) {
    if (c.on_unit_circle) count += c.multiplicity;
  }
  return count;
}

std::size_t numeric_real_roots_in(const IntPoly& p, double lo, double hi, const NumericRootOptions& options) {
  std::size_t count = 0;
  for (const auto& c : numeric_root_clusters(p, options)) {
    if (c.on_real_axis && c.center.real() > lo && c.center.real() < hi) ++count;
  }
  return count;
}

}  // namespace unimodal
