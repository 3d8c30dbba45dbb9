#include <random>

#include "doctest.h"
#include "support.hpp"
#include "unimodal/numeric_roots.hpp"
#include "unimodal/zerocount.hpp"

using namespace unimodal;
using testing_support::product;
using testing_support::random_int_poly;
using testing_support::random_self_reciprocal;

namespace {

IntPoly cyclotomic(std::size_t m) {
  // z^m - 1 divided by the cyclotomic factors of proper divisors.
  IntPoly num = IntPoly::monomial(m) - IntPoly{1};
  for (std::size_t d = 1; d < m; ++d) {
    if (m % d == 0) num = divide_exact(num, cyclotomic(d));
  }
  return num;
}

CosPoly counterexample(std::size_t n) {
  std::vector<Integer> c(4 * n + 2, 0);
  c[1] += 1;
  c[4 * n + 1] += 1;
  for (std::size_t k = 0; k < n; ++k) {
    c[4 * k + 1] += 1;
    c[4 * k + 3] -= 1;
  }
  return CosPoly(c);
}

}  // namespace

TEST_CASE("Sturm chain shape") {
  const IntPoly g{-1, 2, 4};
  const SturmChain chain(g);
  for (std::size_t i = 1; i < chain.polys().size(); ++i) {
    CHECK(*chain.polys()[i].degree() < *chain.polys()[i - 1].degree());
  }
  CHECK(*chain.polys().back().degree() == 0);
  CHECK(chain.count(-1, 1) == 2);
}

TEST_CASE("count_roots_in") {
  CHECK(count_roots_in(IntPoly{-1, 2, 4}, -1, 1) == 2);
  CHECK(count_roots_in(IntPoly{1, 0, 1}, -1, 1) == 0);
  CHECK_THROWS_AS(count_roots_in(IntPoly{-1, 1}, 0, 1), PreconditionError);
}

TEST_CASE("count_roots_in agrees with the numeric root finder") {
  std::mt19937_64 rng(1234);
  NumericRootOptions opts;
  for (int trial = 0; trial < 1000; ++trial) {
    const IntPoly g = random_int_poly(rng, 1 + trial % 30, -9, 9).primitive_part();
    if (g.sign_at(-1) == 0 || g.sign_at(1) == 0) continue;
    const auto factors = squarefree_decompose(g);
    IntPoly radical{1};
    for (const auto& f : factors) radical = radical * f.factor;
    const std::size_t exact = count_roots_in(radical, -1, 1);
    CHECK(exact == numeric_real_roots_in(g, -1.0, 1.0, opts));
  }
}

TEST_CASE("square-free decomposition") {
  const auto f = squarefree_decompose(IntPoly{-1, 1} * IntPoly{-1, 1} * IntPoly{2, 1});
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == IntPoly{2, 1});
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].factor == IntPoly{-1, 1});
  CHECK(f[1].multiplicity == 2);
  const IntPoly sf{-1, 2, 4};
  const auto single = squarefree_decompose(sf);
  REQUIRE(single.size() == 1);
  CHECK(single[0].factor == sf);
  CHECK_THROWS_AS(squarefree_decompose(IntPoly{}), PreconditionError);
}

TEST_CASE("square-free decomposition reconstructs random factored inputs") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> count(1, 4), power(1, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<IntPoly> parts;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
      const IntPoly f = random_int_poly(rng, 1 + trial % 3, -4, 4);
      const int e = power(rng);
      for (int j = 0; j < e; ++j) parts.push_back(f);
    }
    const IntPoly g = product(parts);
    const auto decomposition = squarefree_decompose(g);
    IntPoly rebuilt{1};
    unsigned last = 0;
    for (const auto& f : decomposition) {
      CHECK(f.multiplicity > last);
      last = f.multiplicity;
      CHECK(gcd(f.factor, f.factor.derivative()).degree() == 0u);
      for (unsigned j = 0; j < f.multiplicity; ++j) rebuilt = rebuilt * f.factor;
    }
    CHECK(rebuilt == g.primitive_part());
  }
}

TEST_CASE("zero_report examples") {
  const ZeroReport a = zero_report(CosPoly{1, 2, 2});
  CHECK(a.nz == 4);
  CHECK(a.nz_star == 4);
  const ZeroReport b = zero_report(CosPoly{1, 1});
  CHECK(b.nz == 2);
  CHECK(b.nz_star == 0);
  CHECK(b.mult_at_minus1 == 1);
  const ZeroReport c = zero_report(counterexample(3));
  CHECK(c.nz == 2);
  CHECK(c.nz_star == 2);
  CHECK_THROWS_AS(zero_report(CosPoly{}), PreconditionError);
}

TEST_CASE("zero_report invariants") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<IntPoly> parts{random_int_poly(rng, 1 + trial % 8, -3, 3)};
    if (trial % 3 == 0) parts.push_back(parts[0]);
    if (trial % 5 == 0) parts.push_back(IntPoly{1, 1});
    const IntPoly g = product(parts);
    const CosPoly t(std::vector<Integer>(g.coeffs().begin(), g.coeffs().end()));
    const ZeroReport r = zero_report(t);
    std::uint64_t sum = 0;
    for (const auto& iv : r.interior) {
      sum += iv.multiplicity;
      CHECK(iv.lo < iv.hi);
      CHECK(iv.hi - iv.lo < Rational(1, 1) / Rational(Integer(1) << 60));
    }
    CHECK(r.nz == 2 * sum + 2 * r.mult_at_plus1 + 2 * r.mult_at_minus1);
    CHECK(r.nz_star % 2 == 0);
    CHECK(r.nz_star <= r.nz);
    for (std::size_t i = 1; i < r.interior.size(); ++i) CHECK(r.interior[i - 1].hi < r.interior[i].lo);
  }
}

TEST_CASE("nz_unimodular examples") {
  CHECK(nz_unimodular(IntPoly{1, 1, 1}) == 2);
  CHECK(nz_unimodular(IntPoly{1, 1, 1, 1, 1}) == 4);
  CHECK(nz_unimodular(IntPoly{1, 1}) == 1);
  CHECK(nz_unimodular(IntPoly{5}) == 0);
  CHECK_THROWS_AS(nz_unimodular(IntPoly{1, 1, -1, -1, 1}), PreconditionError);
  CHECK(nz_unimodular_any(IntPoly{1, 1, -1, -1, 1}).nz == 0);
  CHECK(nz_unimodular_any(IntPoly{1, 1, -1, -1, 1}).reduction == Reduction::ReciprocalProduct);
  CHECK(nz_unimodular_any(IntPoly{0, 1, -1}).nz == 1);
  CHECK(nz_unimodular_any(IntPoly{0, 1, -1}).reduction == Reduction::AntiReciprocal);
  CHECK(nz_unimodular_any(IntPoly{1, 2}).nz == 0);
}

TEST_CASE("self-reciprocal Littlewood polynomials of degree 1..8 have a unimodular zero") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::size_t half = n / 2 + 1;
    for (unsigned mask = 0; mask < (1u << half); ++mask) {
      std::vector<Integer> c(n + 1);
      for (std::size_t j = 0; j < half; ++j) {
        c[j] = (mask >> j) & 1 ? 1 : -1;
        c[n - j] = c[j];
      }
      const IntPoly p(c);
      const auto z = nz_unimodular(p);
      CHECK(z >= 1);
      CHECK(nz_unimodular(-p) == z);
      CHECK(nz_unimodular(p.reversed()) == z);
      if (n % 2 == 1) CHECK(p.eval(-1) == 0);
    }
  }
}

TEST_CASE("cyclotomic products give their known counts") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> order(2, 30), times(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IntPoly> parts;
    std::uint64_t expected = 0;
    for (int k = 0; k < 3; ++k) {
      const IntPoly c = cyclotomic(order(rng));
      const std::size_t e = times(rng);
      for (std::size_t j = 0; j < e; ++j) parts.push_back(c);
      expected += e * *c.degree();
    }
    // A factor without unimodular zeros: 2z^2 + 5z + 2 = (2z + 1)(z + 2).
    parts.push_back(IntPoly{2, 5, 2});
    const IntPoly p = product(parts);
    REQUIRE(is_self_reciprocal(p));
    CHECK(nz_unimodular(p) == expected);
  }
}

TEST_CASE("Sturm and subdivision isolation agree") {
  std::mt19937_64 rng(404);
  ZeroCountOptions sturm{IsolationMethod::Sturm, 0};
  ZeroCountOptions sub{IsolationMethod::Subdivision, 0};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 10 + trial % 39;
    const IntPoly p = random_self_reciprocal(rng, 2 * n, -1, 1);
    const ZeroReport a = zero_report(to_cosine(p), sturm);
    const ZeroReport b = zero_report(to_cosine(p), sub);
    CHECK(a.nz == b.nz);
    CHECK(a.nz_star == b.nz_star);
    REQUIRE(a.interior.size() == b.interior.size());
    for (std::size_t i = 0; i < a.interior.size(); ++i) {
      CHECK(a.interior[i].lo < b.interior[i].hi);
      CHECK(b.interior[i].lo < a.interior[i].hi);
    }
  }
}

TEST_CASE("exact counts agree with the numeric oracle on self-reciprocal inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const IntPoly p = random_self_reciprocal(rng, 1 + trial % 30, -2, 2);
    CHECK(nz_unimodular(p) == numeric_unimodular_count(p));
  }
}

TEST_CASE("modular square-free certificate") {
  CHECK(detail::squarefree_mod_p(IntPoly{-1, 2, 4}));
  CHECK_FALSE(detail::squarefree_mod_p(IntPoly{1, 2, 1}));
}

TEST_CASE("numeric oracle counts multiple unimodular roots") {
  // A seeded instance with a fourfold root at 1.
  const IntPoly p{-2, 2, 2, 0, -2, 0, 0, -2, 0, 2, 2, -2};
  CHECK(nz_unimodular(p) == 11);
  CHECK(numeric_unimodular_count(p) == 11);
  for (std::size_t e = 1; e <= 5; ++e) {
    std::vector<IntPoly> parts(e, IntPoly{-1, 1});
    parts.push_back(IntPoly{1, 1, 1});
    parts.push_back(IntPoly{1, 1, 1});
    const IntPoly q = product(parts);
    CHECK(numeric_unimodular_count(q) == e + 4);
    // The lower working precision resolves a root of multiplicity m only to about 10^(-41/m).
    if (e <= 3) CHECK(numeric_unimodular_count(q, {OraclePrecision::Polish}) == e + 4);
  }
}
