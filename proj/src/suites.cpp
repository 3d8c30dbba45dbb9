#include "unimodal/suites.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "unimodal/families.hpp"
#include "unimodal/machinery.hpp"
#include "unimodal/parallel.hpp"

namespace unimodal {

namespace {


struct Outcome {
  std::vector<CheckRow> rows;
  std::vector<std::pair<std::string, std::string>> skipped;
};

SuiteResult run_indexed(const std::string& name, std::uint64_t count, const SuiteOptions& o,
                        const std::function<Outcome(std::uint64_t)>& body) {
  std::vector<Outcome> slots(count);
  parallel_shards(count, o.workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) slots[i] = body(i);
  });
  SuiteResult r;
  r.name = name;
  for (auto& s : slots) {
    for (auto& row : s.rows) r.rows.push_back(std::move(row));
    for (auto& sk : s.skipped) r.skipped.push_back(std::move(sk));
  }
  return r;
}

std::string id_of(const std::string& suite, std::uint64_t i) { return suite + "/" + std::to_string(i); }

CheckRow row(std::string id, double lhs, double rhs, double margin, bool pass, std::string note = "") {
  return CheckRow{std::move(id), lhs, rhs, margin, pass, std::move(note)};
}

IntPoly random_sr_ternary(SplitMix64& rng) {
  const std::size_t n = 2 * (1 + rng.below(20));
  std::vector<Integer> c(n + 1);
  for (std::size_t j = 0; j <= n / 2; ++j) {
    long v = static_cast<long>(rng.below(3)) - 1;
    while (j == 0 && v == 0) v = static_cast<long>(rng.below(3)) - 1;
    c[j] = c[n - j] = v;
  }
  return IntPoly(std::move(c));
}

Outcome littlewood_l1(std::uint64_t i, SplitMix64& rng, const SuiteOptions& o) {
  const long m = 1 + static_cast<long>(rng.below(64));
  std::set<long> used;
  std::vector<ExpSum::Term> terms;
  while (static_cast<long>(terms.size()) < m) {
    const long f = static_cast<long>(rng.below(static_cast<std::uint64_t>(8 * m + 1))) - 4 * m;
    if (!used.insert(f).second) continue;
    const double radius = 0.5 + 1.5 * rng.uniform();
    terms.push_back({f, std::polar(radius, 2 * M_PI * rng.uniform())});
  }
  const auto r = check_littlewood_bound(ExpSum(terms), {o.quad_tol, 40});
  return {{row(id_of("littlewood-l1", i), r.lhs, std::max(r.rhs_harmonic, r.rhs_log),
               std::min(r.margin_harmonic, r.margin_log), r.pass(), "m=" + std::to_string(m))},
          {}};
}

Outcome arc_l1(std::uint64_t i, SplitMix64& rng, const SuiteOptions& o) {
  const IntPoly p = random_sr_ternary(rng);
  const std::size_t k = 1 + rng.below(3);
  const auto r = check_arc_l1_bound(p, CoeffSet{-1, 0, 1}, k, 1.0 / (2.0 * static_cast<double>(k)), std::nullopt,
                                    {o.quad_tol, 40});
  return {{row(id_of("arc-l1", i), r.lhs, r.rhs, r.margin, r.pass, r.degenerate ? "degenerate" : "")}, {}};
}

Outcome antiderivative(std::uint64_t i, SplitMix64& rng) {
  const IntPoly p = random_sr_ternary(rng);
  const std::size_t k = 1 + rng.below(3);
  const auto r = check_antiderivative_bound(p, CoeffSet{-1, 0, 1}, k);
  return {{row(id_of("antiderivative", i), r.max_abs, r.bound, r.bound - r.max_abs, r.pass)}, {}};
}

Outcome level_crossings(std::uint64_t i, SplitMix64& rng) {
  std::vector<Integer> c(1 + rng.below(21));
  for (auto& x : c) x = static_cast<long>(rng.below(11)) - 5;
  const double delta = 0.1 + (M_PI - 0.1) * rng.uniform();
  const CosPoly t(c);
  if (t.is_zero()) return {{row(id_of("level-crossings", i), 0, 0, 0, true, "T = 0")}, {}};
  const auto r = check_level_crossings(t, delta);
  return {{row(id_of("level-crossings", i), static_cast<double>(r.best.crossings), static_cast<double>(r.required),
               static_cast<double>(r.best.crossings) - static_cast<double>(r.required), r.pass,
               "grid=" + std::to_string(r.grid))},
          {}};
}

Outcome sign_change(std::uint64_t i, SplitMix64& rng) {
  const IntPoly p = random_sr_ternary(rng);
  const std::size_t k = 1 + rng.below(3);
  const auto r = check_sign_change_bound(p, CoeffSet{-1, 0, 1}, k);
  return {{row(id_of("sign-change", i), static_cast<double>(r.nz_star), r.rhs,
               static_cast<double>(r.nz_star) - r.rhs, r.pass)},
          {}};
}

Outcome solve_bound(std::uint64_t i, SplitMix64& rng) {
  for (;;) {
    const std::size_t d = 1 + rng.below(6);
    IntMatrix a(d, std::vector<Integer>(d));
    for (auto& r : a)
      for (auto& x : r) x = static_cast<long>(rng.below(11)) - 5;
    std::vector<GaussianRational> b(d);
    for (auto& x : b) {
      x.re = Rational(static_cast<long>(rng.below(101)) - 50, 1 + static_cast<long>(rng.below(7)));
      x.re.canonicalize();
      x.im = Rational(static_cast<long>(rng.below(101)) - 50);
    }
    if (integer_rank(a) < d) continue;
    const auto r = check_integer_solve_bound(a, b);
    const double lhs = r.max_x_squared.get_d(), rhs = r.bound_squared.get_d();
    return {{row(id_of("solve-bound", i), lhs, rhs, rhs - lhs, r.pass, "d=" + std::to_string(d))}, {}};
  }
}

Outcome corpus_f(const std::string& suite, const std::pair<std::string, IntPoly>& item, const SuiteOptions& o) {
  const std::string id = suite + "/" + item.first;
  try {
    const FProduct f = build_F(item.second, Integer(static_cast<unsigned long>(o.dm_budget)));
    const CoeffSet s = CoeffSet::of(item.second);
    const BoundCheck c = suite == "small-runs" ? verify_small_runs(f, s) : verify_term_count(f, s);
    const double lhs = std::stod(c.lhs), rhs = std::stod(c.rhs);
    return {{row(id, lhs, rhs, rhs - lhs, c.pass, "d=" + std::to_string(f.d) + "; " + c.note)}, {}};
  } catch (const BudgetExceeded& e) {
    return {{}, {{id, e.what()}}};
  }
}

const std::vector<std::pair<std::string, IntPoly>> kMultipliers = {
    {"1", IntPoly{1}}, {"z-1", IntPoly{-1, 1}}, {"1-z+z2", IntPoly{1, -1, 1}}, {"1+z2", IntPoly{1, 0, 1}}};

Outcome nc_ph(const std::pair<std::string, IntPoly>& item, const SuiteOptions& o) {
  Outcome out;
  for (const auto& [rname, r] : kMultipliers) {
    const std::string id = "nc-ph/" + item.first + "*" + rname;
    const NcPhReport rep = nc_ph_bound(item.second, r, CoeffSet::of(item.second), std::nullopt,
                                       Integer(static_cast<unsigned long>(o.dm_budget)));
    if (rep.skipped) {
      out.skipped.emplace_back(id, rep.reason);
      continue;
    }
    const double lhs = static_cast<double>(rep.nc_ph), rhs = rep.mu.get_d();
    out.rows.push_back(row(id, lhs, rhs, rhs - lhs, rep.pass, "k=" + rep.k.get_str()));
  }
  return out;
}

SuiteResult totient_suite() {
  constexpr std::uint64_t hi = 1000000;
  const auto phi = totient_table(hi);
  double worst = 1e300;
  std::uint64_t at = 4;
  for (std::uint64_t n = 4; n <= hi; ++n) {
    const double ratio = static_cast<double>(phi[n]) * 8 * std::log(std::log(static_cast<double>(n))) /
                         static_cast<double>(n);
    if (ratio < worst) {
      worst = ratio;
      at = n;
    }
  }
  SuiteResult r;
  r.name = "totient";
  const bool pass = !totient_sweep(4, hi).has_value();
  r.rows.push_back(row("totient/4..1000000", worst, 1.0, worst - 1.0, pass, "min ratio at n=" + std::to_string(at)));
  return r;
}

SuiteResult lcm_suite() {
  SuiteResult r;
  r.name = "lcm";
  for (unsigned m = 1; m <= 30; ++m) {
    bool pass = true;
    Integer l = 1;
    try {
      l = lcm_upto(m);
    } catch (const CertificationError&) {
      pass = false;
    }
    const double lhs = std::log(l.get_d()), rhs = m * std::log(3.0);
    r.rows.push_back(row("lcm/" + std::to_string(m), lhs, rhs, rhs - lhs, pass, "d_m=" + l.get_str()));
  }
  return r;
}

}  // namespace

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += !r.pass;
  return n;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (index * 0xd1b54a32d192ed03ULL));
  g.next();
  return g.next();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"littlewood-l1", "arc-l1",     "antiderivative", "level-crossings",
                                                 "sign-change",   "solve-bound", "small-runs",     "term-count",
                                                 "nc-ph",         "totient",     "lcm"};
  return names;
}

std::vector<std::pair<std::string, IntPoly>> machinery_corpus() {
  std::vector<std::pair<std::string, IntPoly>> out;
  out.emplace_back("one", IntPoly{1});
  for (std::size_t n = 2; n <= 16; n += 2) {
    out.emplace_back("geom/" + std::to_string(n), IntPoly(std::vector<Integer>(n + 1, 1)));
  }
  for (std::size_t n = 2; n <= 16; n += 2) {
    enumerate_selfreciprocal_littlewood(n, 1ULL << 20, [&](std::uint64_t mask, const IntPoly& p) {
      out.emplace_back("sr-littlewood/" + std::to_string(n) + "/" + std::to_string(mask), p);
    });
  }
  for (std::size_t n = 1; n <= 10; ++n) {
    out.emplace_back("counterexample/" + std::to_string(n), cosine_to_selfreciprocal(counterexample_T(n)));
  }
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "totient") return totient_suite();
  if (name == "lcm") return lcm_suite();
  if (name == "small-runs" || name == "term-count" || name == "nc-ph") {
    const auto corpus = machinery_corpus();
    return run_indexed(name, corpus.size(), o, [&](std::uint64_t i) {
      return name == "nc-ph" ? nc_ph(corpus[i], o) : corpus_f(name, corpus[i], o);
    });
  }
  std::function<Outcome(std::uint64_t, SplitMix64&)> body;
  if (name == "littlewood-l1") body = [&](std::uint64_t i, SplitMix64& g) { return littlewood_l1(i, g, o); };
  else if (name == "arc-l1") body = [&](std::uint64_t i, SplitMix64& g) { return arc_l1(i, g, o); };
  else if (name == "antiderivative") body = antiderivative;
  else if (name == "level-crossings") body = level_crossings;
  else if (name == "sign-change") body = sign_change;
  else if (name == "solve-bound") body = solve_bound;
  else throw PreconditionError("unknown suite '" + name + "'");
  return run_indexed(name, o.count, o, [&](std::uint64_t i) {
    SplitMix64 g(instance_seed(o.seed, i));
    return body(i, g);
  });
}

}  // namespace unimodal
