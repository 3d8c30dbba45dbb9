#include "doctest.h"

#include <map>
#include <set>

#include "unimodal/families.hpp"
#include "unimodal/numeric_roots.hpp"
#include "unimodal/zerocount.hpp"

using namespace unimodal;

namespace {

std::uint64_t splitmix_reference(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::set<std::uint64_t> quadratic_residues(std::uint64_t p) {
  std::set<std::uint64_t> r;
  for (std::uint64_t x = 1; x < p; ++x) r.insert(x * x % p);
  return r;
}

}  // namespace

TEST_CASE("SplitMix64 matches the reference recurrence") {
  SplitMix64 a(0);
  CHECK(a.next() == 0xe220a8397b1dcdafULL);
  for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 0xdeadbeefULL}) {
    SplitMix64 g(seed);
    std::uint64_t x = seed;
    for (int i = 0; i < 1000; ++i) CHECK(g.next() == splitmix_reference(x));
  }
  SplitMix64 u(3);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0);
    CHECK(v < 1);
  }
}

TEST_CASE("SplitMix64::below is uniform within 5 percent") {
  SplitMix64 g(42);
  std::map<std::uint64_t, int> counts;
  for (int i = 0; i < 100000; ++i) ++counts[g.below(5)];
  CHECK(counts.size() == 5);
  for (const auto& [v, c] : counts) {
    CHECK(v < 5);
    CHECK(std::abs(c - 20000) < 1000);
  }
}

TEST_CASE("random_poly: determinism, membership and frequencies") {
  const CoeffSet s{-2, -1, 0, 1, 2};
  CHECK(random_poly(s, 30, 9) == random_poly(s, 30, 9));
  CHECK(!(random_poly(s, 30, 9) == random_poly(s, 30, 10)));
  std::map<long, int> counts;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    const IntPoly p = random_poly(s, 24, seed);
    REQUIRE(p.degree() == 24u);
    for (std::size_t i = 0; i < 24; ++i) {
      CHECK(s.contains(p.coeff(i)));
      ++counts[p.coeff(i).get_si()];
    }
    CHECK(p.leading() != 0);
  }
  // 96000 draws over five values.
  for (const auto& [v, c] : counts) CHECK(std::abs(c - 19200) < 960);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const IntPoly p = random_self_reciprocal(s, 2 + seed % 20, seed);
    CHECK(is_self_reciprocal(p));
    CHECK(p.degree() == 2 + seed % 20);
    CHECK(p.coeff(0) != 0);
  }
}

TEST_CASE("family members") {
  CHECK(family_name(Family::SelfReciprocalLittlewood) == "sr-littlewood");
  CHECK(parse_family("skew-littlewood") == Family::SkewReciprocalLittlewood);
  CHECK(!parse_family("nope").has_value());
  for (std::size_t n = 1; n <= 12; ++n) {
    std::set<std::vector<long>> seen;
    CHECK(family_size(n, Family::SelfReciprocalLittlewood) == (1ULL << (n / 2 + 1)));
    enumerate_family(n, Family::SelfReciprocalLittlewood, 1 << 20, [&](std::uint64_t, const IntPoly& p) {
      CHECK(is_self_reciprocal(p));
      CHECK(p.degree() == n);
      std::vector<long> c;
      for (const auto& x : p.coeffs()) {
        CHECK(abs(x) == 1);
        c.push_back(x.get_si());
      }
      seen.insert(c);
    });
    CHECK(seen.size() == family_size(n, Family::SelfReciprocalLittlewood));
  }
  // Exhaustive oracle: the self-reciprocal Littlewood polynomials of degree 8.
  std::size_t brute = 0;
  for (unsigned bits = 0; bits < 512; ++bits) {
    std::vector<Integer> c(9);
    for (int j = 0; j < 9; ++j) c[j] = (bits >> j) & 1 ? 1 : -1;
    brute += is_self_reciprocal(IntPoly(c));
  }
  CHECK(brute == family_size(8, Family::SelfReciprocalLittlewood));

  for (std::size_t n = 1; n <= 16; ++n) {
    std::size_t brute_skew = 0;
    if (n <= 12) {
      for (unsigned bits = 0; bits < (1u << (n + 1)); ++bits) {
        std::vector<Integer> c(n + 1);
        for (std::size_t j = 0; j <= n; ++j) c[j] = (bits >> j) & 1 ? 1 : -1;
        brute_skew += is_skew_reciprocal(IntPoly(c));
      }
      CHECK(brute_skew == family_size(n, Family::SkewReciprocalLittlewood));
    }
    if (family_size(n, Family::SkewReciprocalLittlewood) == 0) continue;
    enumerate_family(n, Family::SkewReciprocalLittlewood, 1 << 20, [&](std::uint64_t, const IntPoly& p) {
      CHECK(is_skew_reciprocal(p));
      CHECK(p.degree() == n);
    });
  }
  CHECK_THROWS_AS(enumerate_family(30, Family::SelfReciprocalLittlewood, 100, [](std::uint64_t, const IntPoly&) {}),
                  BudgetExceeded);
}

TEST_CASE("census agrees with a direct enumeration") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::map<std::uint64_t, std::uint64_t> hist;
    std::uint64_t total = 0;
    enumerate_selfreciprocal_littlewood(n, 1 << 20, [&](std::uint64_t, const IntPoly& p) {
      const std::uint64_t z = numeric_unimodular_count(p);
      ++hist[z];
      total += z;
    });
    const EnumSummary s = census(n, Family::SelfReciprocalLittlewood);
    CHECK(s.histogram == hist);
    CHECK(s.min_nz == hist.begin()->first);
    CHECK(s.max_nz == hist.rbegin()->first);
    Rational avg(static_cast<unsigned long>(total), static_cast<unsigned long>(s.count));
    avg.canonicalize();
    CHECK(s.avg_nz == avg);
    REQUIRE(s.argmin_mask.has_value());
    CHECK(nz_unimodular(s.argmin) == s.min_nz);
    CHECK(s.argmin == family_member(n, Family::SelfReciprocalLittlewood, *s.argmin_mask));
  }
}

TEST_CASE("census: small-degree facts and worker independence") {
  for (std::size_t n = 1; n <= 16; ++n) {
    const EnumSummary a = census(n, Family::SelfReciprocalLittlewood, {1ULL << 24, 1});
    const EnumSummary b = census(n, Family::SelfReciprocalLittlewood, {1ULL << 24, 3});
    CHECK(a.histogram == b.histogram);
    CHECK(a.argmin_mask == b.argmin_mask);
    CHECK(a.avg_nz == b.avg_nz);
    CHECK(a.min_nz >= 1);
    if (n % 2 == 1 && n >= 3) CHECK(a.min_nz >= 3);
    if (n % 2 == 0 && n >= 14) CHECK(a.min_nz >= 4);
    // Frozen minima; exact counts, the 400-bit oracle and numpy agree on the minimizers.
    static const std::uint64_t frozen_min[] = {1, 2, 3, 2, 3, 2, 3, 2, 3, 2, 3, 2, 5, 6, 3, 4};
    CHECK(a.min_nz == frozen_min[n - 1]);
    CHECK(a.avg_nz * 4 >= Rational(static_cast<unsigned long>(n)));
  }
  for (std::size_t n = 4; n <= 16; n += 4) {
    const EnumSummary s = census(n, Family::SkewReciprocalLittlewood);
    CHECK(s.count == family_size(n, Family::SkewReciprocalLittlewood));
    CHECK(s.max_nz == 0);
  }
}

TEST_CASE("odd degree 7 has a member with exactly three unimodular zeros") {
  const IntPoly p{-1, 1, -1, -1, -1, -1, 1, -1};
  CHECK(is_self_reciprocal(p));
  CHECK(nz_unimodular(p) == 3);
  CHECK(numeric_unimodular_count(p) == 3);
}

TEST_CASE("Legendre symbols and Fekete polynomials") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL, 103ULL}) {
    const auto qr = quadratic_residues(p);
    CHECK(legendre(0, p) == 0);
    for (std::int64_t k = 1; k < static_cast<std::int64_t>(p); ++k) {
      CHECK(legendre(k, p) == (qr.count(static_cast<std::uint64_t>(k)) ? 1 : -1));
      CHECK(legendre(k + static_cast<std::int64_t>(p), p) == legendre(k, p));
      CHECK(legendre(-k, p) == legendre(static_cast<std::int64_t>(p) - k, p));
    }
  }
  CHECK(fekete(5) == IntPoly{0, 1, -1, -1, 1});
  for (std::uint64_t p = 3; p <= 2003; p += 2) {
    if (!is_prime(p)) continue;
    const IntPoly f = fekete(p);
    CHECK(f.eval(1) == 0);
    CHECK(f.degree() == p - 1);
    if (p % 4 == 1) CHECK(is_self_reciprocal(f.shift_down(1)));
    if (p % 4 == 3) CHECK(is_anti_reciprocal(f.shift_down(1)));
  }
  CHECK_THROWS_AS(fekete(9), PreconditionError);
  CHECK_THROWS_AS(fekete(2), PreconditionError);
}

TEST_CASE("Fekete zero counts agree with the numeric oracle") {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL, 41ULL, 43ULL, 101ULL, 103ULL}) {
    const FeketeRow row = fekete_zero_fraction(p, {true});
    REQUIRE(row.numeric_nz.has_value());
    CHECK(row.nz == *row.numeric_nz);
    CHECK(row.nz == numeric_unimodular_count(fekete(p)));
    CHECK(row.fraction == Rational(static_cast<unsigned long>(row.nz), static_cast<unsigned long>(p)));
    CHECK(row.reduction == (p % 4 == 1 ? Reduction::SelfReciprocal : Reduction::AntiReciprocal));
  }
  CHECK(fekete_zero_fraction(101).nz == 51);
  CHECK(fekete_zero_fraction(103).nz == 51);
}

TEST_CASE("counterexample family") {
  const CosPoly t1 = counterexample_T(1);
  CHECK(t1 == CosPoly{0, 2, 0, -1, 0, 1});
  for (std::size_t n = 1; n <= 50; ++n) {
    CHECK(counterexample_residual(n).is_zero());
    const CosPoly t = counterexample_T(n);
    CHECK(t.degree() == 4 * n + 1);
    const ZeroReport r = zero_report(t);
    CHECK(r.nz == 2);
    CHECK(r.nz_star == 2);
    // Sequence check: a_1 = 2, a_3 = -1, then alternating +-1 on odd frequencies up to 4n+1.
    for (std::size_t j = 0; j <= 4 * n + 1; ++j) {
      long expected = 0;
      if (j == 1) expected = 2;
      else if (j % 4 == 1) expected = 1;
      else if (j % 4 == 3) expected = -1;
      CHECK(t.coeff(j) == expected);
    }
  }
}
