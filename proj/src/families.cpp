#include "unimodal/families.hpp"

#include <algorithm>
#include <vector>

#include "unimodal/numeric_roots.hpp"
#include "unimodal/parallel.hpp"

namespace unimodal {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1p-53; }

namespace {

std::vector<Integer> elements_of(const CoeffSet& s, bool nonzero) {
  std::vector<Integer> out;
  for (const auto& e : s.elements()) {
    if (!nonzero || e != 0) out.push_back(e);
  }
  if (out.empty()) throw PreconditionError("coefficient set has no usable element");
  return out;
}

}  // namespace

IntPoly random_poly(const CoeffSet& s, std::size_t n, std::uint64_t seed) {
  const auto all = elements_of(s, false);
  const auto lead = elements_of(s, true);
  SplitMix64 rng(seed);
  std::vector<Integer> c(n + 1);
  for (std::size_t j = 0; j < n; ++j) c[j] = all[rng.below(all.size())];
  c[n] = lead[rng.below(lead.size())];
  return IntPoly(std::move(c));
}

IntPoly random_self_reciprocal(const CoeffSet& s, std::size_t n, std::uint64_t seed) {
  const auto all = elements_of(s, false);
  const auto lead = elements_of(s, true);
  SplitMix64 rng(seed);
  std::vector<Integer> c(n + 1);
  c[0] = c[n] = lead[rng.below(lead.size())];
  for (std::size_t j = 1; j <= n / 2; ++j) c[j] = c[n - j] = all[rng.below(all.size())];
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------- Littlewood

std::string family_name(Family f) {
  return f == Family::SelfReciprocalLittlewood ? "sr-littlewood" : "skew-littlewood";
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "sr-littlewood" || name == "self-reciprocal-littlewood") return Family::SelfReciprocalLittlewood;
  if (name == "skew-littlewood" || name == "skew-reciprocal-littlewood") return Family::SkewReciprocalLittlewood;
  return std::nullopt;
}

namespace {

// Free coefficients a_0..a_{free-1}; zero when the family is empty.
std::size_t free_bits(std::size_t n, Family f) {
  if (f == Family::SelfReciprocalLittlewood) return n / 2 + 1;
  // a_j = (-1)^j a_{n-j} forces zeros unless n = 0 mod 4.
  return n % 4 == 0 ? n / 2 + 1 : 0;
}

}  // namespace

std::uint64_t family_size(std::size_t n, Family f) {
  const std::size_t bits = free_bits(n, f);
  if (bits == 0) return 0;
  if (bits >= 64) throw BudgetExceeded("family_size: degree beyond the 64-bit encoding");
  return 1ULL << bits;
}

IntPoly family_member(std::size_t n, Family f, std::uint64_t mask) {
  const std::size_t bits = free_bits(n, f);
  if (bits == 0) throw PreconditionError("family_member: empty family");
  std::vector<Integer> c(n + 1);
  for (std::size_t j = 0; j < bits; ++j) {
    const long v = (mask >> j) & 1 ? 1 : -1;
    c[j] = v;
    const bool flip = f == Family::SkewReciprocalLittlewood && j % 2 == 1;
    c[n - j] = flip ? -v : v;
  }
  return IntPoly(std::move(c));
}

void enumerate_family(std::size_t n, Family f, std::uint64_t budget,
                      const std::function<void(std::uint64_t, const IntPoly&)>& visit) {
  if (n < 1) throw PreconditionError("enumerate_family: degree must be positive");
  const std::uint64_t size = family_size(n, f);
  if (size > budget) {
    throw BudgetExceeded("enumerate_family: " + std::to_string(size) + " members exceed the budget of " +
                         std::to_string(budget));
  }
  for (std::uint64_t mask = 0; mask < size; ++mask) visit(mask, family_member(n, f, mask));
}

void enumerate_selfreciprocal_littlewood(std::size_t n, std::uint64_t budget,
                                         const std::function<void(std::uint64_t, const IntPoly&)>& visit) {
  enumerate_family(n, Family::SelfReciprocalLittlewood, budget, visit);
}

namespace {

std::uint64_t member_nz(const IntPoly& p, Family f) {
  if (f == Family::SelfReciprocalLittlewood) return nz_unimodular(p);
  return nz_unimodular_any(p).nz;
}

struct Partial {
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::optional<std::uint64_t> min_nz;
  std::uint64_t argmin_mask = 0;
};

}  // namespace

EnumSummary census(std::size_t n, Family f, const CensusOptions& options) {
  if (n < 1) throw PreconditionError("census: degree must be positive");
  const std::uint64_t size = family_size(n, f);
  if (size > options.budget) {
    throw BudgetExceeded("census: " + std::to_string(size) + " members exceed the budget of " +
                         std::to_string(options.budget));
  }
  EnumSummary out;
  out.degree = n;
  out.family = f;
  out.count = size;
  if (size == 0) return out;

  // P and -P have the same zeros; -P is the complementary mask. Visit the
  // half with bit 0 set and weight each member twice.
  const std::uint64_t half = size / 2;
  const std::uint64_t full = size - 1;
  std::vector<Partial> partials(std::max(1u, options.workers));
  parallel_shards(half, options.workers, [&](unsigned shard, std::uint64_t begin, std::uint64_t end) {
    Partial& part = partials[shard];
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t mask = (i << 1) | 1;
      const std::uint64_t z = member_nz(family_member(n, f, mask), f);
      part.histogram[z] += 2;
      const std::uint64_t smaller = std::min(mask, full ^ mask);
      if (!part.min_nz || z < *part.min_nz || (z == *part.min_nz && smaller < part.argmin_mask)) {
        part.min_nz = z;
        part.argmin_mask = smaller;
      }
    }
  });
  Partial merged;
  for (const auto& part : partials) {
    for (const auto& [k, v] : part.histogram) merged.histogram[k] += v;
    if (part.min_nz && (!merged.min_nz || *part.min_nz < *merged.min_nz ||
                        (*part.min_nz == *merged.min_nz && part.argmin_mask < merged.argmin_mask))) {
      merged.min_nz = part.min_nz;
      merged.argmin_mask = part.argmin_mask;
    }
  }
  out.histogram = std::move(merged.histogram);
  out.min_nz = out.histogram.begin()->first;
  out.max_nz = out.histogram.rbegin()->first;
  out.argmin_mask = merged.argmin_mask;
  out.argmin = family_member(n, f, merged.argmin_mask);
  Integer total = 0;
  for (const auto& [k, v] : out.histogram) total += Integer(std::to_string(k)) * Integer(std::to_string(v));
  out.avg_nz = Rational(total, Integer(std::to_string(size)));
  out.avg_nz.canonicalize();
  return out;
}

// ---------------------------------------------------------------- Fekete

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int legendre(std::int64_t k, std::uint64_t p) {
  const std::int64_t pi = static_cast<std::int64_t>(p);
  const std::uint64_t a = static_cast<std::uint64_t>(((k % pi) + pi) % pi);
  if (a == 0) return 0;
  // Euler's criterion.
  unsigned __int128 r = 1, base = a;
  std::uint64_t e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

IntPoly fekete(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw PreconditionError("fekete: p must be an odd prime");
  std::vector<Integer> c(p);
  for (std::uint64_t k = 0; k < p; ++k) c[k] = legendre(static_cast<std::int64_t>(k), p);
  return IntPoly(std::move(c));
}

FeketeRow fekete_zero_fraction(std::uint64_t p, const FeketeOptions& options) {
  const IntPoly f = fekete(p);
  FeketeRow row;
  row.p = p;
  // f_p / z is self-reciprocal for p = 1 (mod 4) and anti-reciprocal for p = 3 (mod 4).
  const UnimodularCount count = nz_unimodular_any(f);
  row.nz = count.nz;
  row.reduction = count.reduction;
  row.fraction = Rational(Integer(std::to_string(row.nz)), Integer(std::to_string(p)));
  row.fraction.canonicalize();
  row.fraction_reduced = Rational(Integer(std::to_string(row.nz)), Integer(std::to_string(p - 2)));
  row.fraction_reduced.canonicalize();
  if (options.numeric_cross_check) {
    row.numeric_nz = numeric_unimodular_count(f.shift_down(1), {OraclePrecision::Polish, 200});
  }
  return row;
}

// ---------------------------------------------------------------- counterexample

namespace {

CosPoly build_counterexample(std::size_t n) {
  std::vector<Integer> c(4 * n + 2, 0);
  c[1] += 1;
  c[4 * n + 1] += 1;
  for (std::size_t k = 0; k < n; ++k) {
    c[4 * k + 1] += 1;
    c[4 * k + 3] -= 1;
  }
  return CosPoly(std::move(c));
}

}  // namespace

CosPoly counterexample_residual(std::size_t n) {
  const CosPoly t = build_counterexample(n);
  const CosPoly rest = t - CosPoly{0, 1};
  // cos_product_doubled gives 2AB; with A = cos t this is (2 cos t) B.
  const CosPoly lhs = cos_product_doubled(CosPoly{0, 1}, rest);
  std::vector<Integer> r(4 * n + 3, 0);
  r[0] = 1;
  r[4 * n + 2] = 1;
  return lhs - CosPoly(std::move(r));
}

CosPoly counterexample_T(std::size_t n) {
  if (n < 1) throw PreconditionError("counterexample_T: n must be positive");
  if (!counterexample_residual(n).is_zero()) throw CertificationError("counterexample_T: identity fails");
  return build_counterexample(n);
}

}  // namespace unimodal
