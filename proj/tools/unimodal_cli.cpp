// Command-line front end. Exit codes: 0 success, 1 verifier failure,
// 2 parse error, 3 precondition violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "unimodal/config.hpp"
#include "unimodal/families.hpp"
#include "unimodal/machinery.hpp"
#include "unimodal/parallel.hpp"
#include "unimodal/serialize.hpp"
#include "unimodal/suites.hpp"
#include "unimodal/zerocount.hpp"

using namespace unimodal;

namespace {

constexpr int kOk = 0;
constexpr int kVerifierFailure = 1;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + cfg.output);
  out << text;
}

Family family_of(const RunConfig& cfg) {
  const auto f = parse_family(cfg.family);
  if (!f) throw ParseError("unknown family '" + cfg.family + "'");
  return *f;
}

struct NzArgs {
  std::string coeffs;
  std::string file;
  bool lift = false;
  std::string check;
};

int nz_of_poly(const RunConfig& cfg, const IntPoly& p, const NzArgs& a) {
  if (p.is_zero()) throw PreconditionError("nz: zero polynomial");
  Json out;
  out["input"] = poly_to_json(p);
  if (a.check == "skew") {
    if (!is_skew_reciprocal(p)) throw PreconditionError("nz: input is not skew-reciprocal");
  } else if (a.check == "self") {
    if (!is_self_reciprocal(p)) throw PreconditionError("nz: input is not self-reciprocal");
  } else if (!a.check.empty()) {
    throw ParseError("nz: --check takes 'skew' or 'self'");
  }
  const IntPoly core = p.shift_down(p.low_order());
  const bool self = is_self_reciprocal(core);
  out["self_reciprocal"] = self;
  if (!self && !a.lift && a.check != "skew") {
    throw PreconditionError("nz: input is not self-reciprocal; pass --lift to count through a reduction");
  }
  const UnimodularCount c = nz_unimodular_any(p);
  out["nz"] = c.nz;
  out["reduction"] = reduction_name(c.reduction);
  if (self && *core.degree() > 0) {
    const IntPoly even = *core.degree() % 2 == 0 ? core : mul(core, IntPoly{1, 1});
    const ZeroReport r = zero_report(to_cosine(even));
    out["nz_star"] = r.nz_star;
    out["report"] = report_to_json(r);
    if (even.degree() != core.degree()) out["report_of"] = "lift (z+1)P";
  }
  emit(cfg, out.dump(2) + "\n");
  return kOk;
}

int cmd_nz(const RunConfig& cfg, const NzArgs& a) {
  if (a.coeffs.empty() == a.file.empty()) throw ParseError("nz: give exactly one of --coeffs or --file");
  if (a.file.empty()) return nz_of_poly(cfg, parse_coeff_list(a.coeffs), a);
  const Json j = Json::parse(read_file(a.file));
  if (!(j.is_object() && j.value("type", "") == "cos")) {
    return nz_of_poly(cfg, poly_from_json(j.is_object() ? j.at("coeffs") : j), a);
  }
  const CosPoly t = cos_from_json(j);
  if (t.is_zero()) throw PreconditionError("nz: T = 0");
  const ZeroReport r = zero_report(t);
  Json out;
  out["input"] = cos_to_json(t);
  out["nz"] = r.nz;
  out["nz_star"] = r.nz_star;
  out["report"] = report_to_json(r);
  emit(cfg, out.dump(2) + "\n");
  return kOk;
}

int cmd_census(const RunConfig& cfg) {
  const Family f = family_of(cfg);
  std::string text = census_csv_header() + "\n";
  for (std::uint64_t n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    if (family_size(n, f) == 0) {
      std::cerr << "warning: " << family_name(f) << " n=" << n << " is empty, skipped\n";
      continue;
    }
    try {
      text += census_csv_row(census(n, f, {cfg.enum_budget, cfg.workers})) + "\n";
    } catch (const BudgetExceeded& e) {
      std::cerr << "warning: n=" << n << " skipped: " << e.what() << "\n";
    }
  }
  emit(cfg, text);
  return kOk;
}

int cmd_fekete(const RunConfig& cfg, bool numeric) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = std::max<std::uint64_t>(cfg.p_lo, 3); p <= cfg.p_hi; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  std::vector<FeketeRow> rows(primes.size());
  parallel_shards(primes.size(), cfg.workers, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) rows[i] = fekete_zero_fraction(primes[i], {numeric});
  });
  std::string text = fekete_csv_header() + "\n";
  Rational sum = 0;
  bool disagree = false;
  for (const auto& r : rows) {
    text += fekete_csv_row(r) + "\n";
    sum += r.fraction;
    if (r.numeric_nz && *r.numeric_nz != r.nz) disagree = true;
  }
  emit(cfg, text);
  if (!rows.empty()) {
    std::cerr << "mean nz/p over " << rows.size() << " primes: " << Rational(sum / static_cast<unsigned long>(rows.size())).get_d()
              << "\n";
  }
  return disagree ? kVerifierFailure : kOk;
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = suite_names();
  } else if (cfg.suite.empty()) {
    throw ParseError("verify: --suite is required");
  } else {
    names.push_back(cfg.suite);
  }
  SuiteOptions o;
  o.count = cfg.count;
  o.seed = cfg.seed;
  o.workers = cfg.workers;
  o.dm_budget = cfg.dm_budget;
  o.quad_tol = cfg.quad_tol;
  std::string text = csv_header_check() + "\n";
  std::size_t total = 0, failed = 0;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, o);
    for (const auto& row : r.rows) text += csv_row(row) + "\n";
    for (const auto& [id, reason] : r.skipped) std::cerr << "warning: skipped " << id << ": " << reason << "\n";
    total += r.rows.size();
    failed += r.failures();
    std::cerr << name << ": " << r.rows.size() - r.failures() << "/" << r.rows.size() << " pass";
    if (!r.skipped.empty()) std::cerr << ", " << r.skipped.size() << " skipped";
    std::cerr << "\n";
  }
  emit(cfg, text);
  std::cerr << "total: " << total - failed << "/" << total << " pass\n";
  return failed == 0 ? kOk : kVerifierFailure;
}

int cmd_scatter(const RunConfig& cfg) {
  const Family f = family_of(cfg);
  struct Item {
    std::string id;
    IntPoly p;
  };
  std::vector<Item> items;
  for (std::uint64_t n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    if (family_size(n, f) == 0) continue;
    enumerate_family(n, f, cfg.enum_budget, [&](std::uint64_t mask, const IntPoly& p) {
      items.push_back({family_name(f) + "/" + std::to_string(n) + "/" + std::to_string(mask), p});
    });
  }
  std::vector<BoundRow> rows(items.size());
  parallel_shards(items.size(), cfg.workers, [&](unsigned, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) rows[i] = theorem_bound_report(items[i].p, cfg.epsilon, items[i].id);
  });
  std::string text = scatter_header() + "\n";
  for (const auto& r : rows) text += scatter_row(r) + "\n";
  emit(cfg, text);
  if (!cfg.plot.empty()) {
    std::ofstream plot(cfg.plot, std::ios::binary);
    if (!plot) throw PreconditionError("cannot write " + cfg.plot);
    plot << "# abs_P1 nz_star\n";
    for (const auto& r : rows) plot << r.abs_p1.get_str() << " " << r.nz_star << "\n";
  }
  return kOk;
}

int cmd_counterexample(const RunConfig& cfg) {
  std::string text = "n,degree,identity_exact,nz,nz_star,sign_change\n";
  bool ok = true;
  for (std::uint64_t n = std::max<std::uint64_t>(cfg.n_lo, 1); n <= cfg.n_hi; ++n) {
    const bool exact = counterexample_residual(n).is_zero();
    const CosPoly t = counterexample_T(n);
    const ZeroReport r = zero_report(t);
    const auto pts = sign_change_points(t);
    char where[64] = "";
    if (pts.size() == 1) std::snprintf(where, sizeof where, "%.17g", static_cast<double>((pts[0].t_lo + pts[0].t_hi) / 2));
    ok = ok && exact && r.nz == 2 && r.nz_star == 2;
    text += std::to_string(n) + "," + std::to_string(*t.degree()) + "," + (exact ? "true" : "false") + "," +
            std::to_string(r.nz) + "," + std::to_string(r.nz_star) + "," + where + "\n";
  }
  emit(cfg, text);
  return ok ? kOk : kVerifierFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unimodal: unimodular zero counts of integer polynomials and related checks"};
  app.require_subcommand(1);
  app.fallthrough();

  // Config-backed flags are kept as text and applied after the file and
  // the environment, so flags win.
  std::map<std::string, std::string> flags;
  std::vector<std::pair<CLI::Option*, std::string>> bound;
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file");
  auto flag = [&](CLI::App* sub, const std::string& name, const std::string& key, const std::string& help) {
    bound.emplace_back(sub->add_option(name, flags[name + "@" + sub->get_name()], help), key);
  };
  bound.emplace_back(app.add_option("--workers", flags["--workers"], "worker threads"), "workers");
  bound.emplace_back(app.add_option("--output", flags["--output"], "output file (default stdout)"), "output");

  NzArgs nz;
  auto* nz_cmd = app.add_subcommand("nz", "exact unimodular zero count of one polynomial (JSON)");
  nz_cmd->add_option("--coeffs", nz.coeffs, "coefficients a_0,a_1,...");
  nz_cmd->add_option("--file", nz.file, "JSON array of coefficients, or {\"type\":\"cos\",\"coeffs\":[...]}");
  nz_cmd->add_flag("--lift", nz.lift, "allow non-self-reciprocal input");
  nz_cmd->add_option("--check", nz.check, "require a structure: skew or self");

  auto* census_cmd = app.add_subcommand("census", "exhaustive census of a Littlewood family (CSV)");
  flag(census_cmd, "--family", "family", "sr-littlewood or skew-littlewood");
  flag(census_cmd, "--n", "n", "degree range a..b");
  flag(census_cmd, "--budget", "enum_budget", "maximum family size");

  bool numeric = false;
  auto* fekete_cmd = app.add_subcommand("fekete", "unimodular zero fractions of Fekete polynomials (CSV)");
  flag(fekete_cmd, "--p", "p", "prime range a..b");
  fekete_cmd->add_flag("--numeric", numeric, "cross-check with the numeric root finder");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite (CSV)");
  flag(verify_cmd, "--suite", "suite", "suite name or 'all'");
  flag(verify_cmd, "--count", "count", "instances per seeded suite");
  flag(verify_cmd, "--seed", "seed", "seed");
  flag(verify_cmd, "--dm-budget", "dm_budget", "largest allowed d_m");
  flag(verify_cmd, "--quad-tol", "quad_tol", "quadrature relative tolerance");

  auto* scatter_cmd = app.add_subcommand("scatter", "bound report rows over a family (CSV)");
  flag(scatter_cmd, "--family", "family", "sr-littlewood");
  flag(scatter_cmd, "--n", "n", "degree range a..b");
  flag(scatter_cmd, "--eps", "epsilon", "epsilon in (0, 1)");
  flag(scatter_cmd, "--plot", "plot", "two-column data file: abs_P1 nz_star");

  auto* counter_cmd = app.add_subcommand("counterexample", "the two-zero cosine family (CSV)");
  flag(counter_cmd, "--n", "n", "range a..b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    RunConfig cfg;
    if (counter_cmd->parsed()) {
      cfg.n_lo = 1;
      cfg.n_hi = 50;
    }
    if (!config_path.empty()) cfg = RunConfig::from_text(read_file(config_path), cfg);
    cfg.apply_process_env();
    for (const auto& [opt, key] : bound) {
      if (opt->count() == 0) continue;
      const std::string value = opt->as<std::string>();
      if (key == "n" || key == "p") {
        const auto [lo, hi] = parse_range(value);
        cfg.set(key + "_lo", std::to_string(lo));
        cfg.set(key + "_hi", std::to_string(hi));
      } else {
        cfg.set(key, value);
      }
    }
    cfg.validate();

    if (nz_cmd->parsed()) return cmd_nz(cfg, nz);
    if (census_cmd->parsed()) return cmd_census(cfg);
    if (fekete_cmd->parsed()) return cmd_fekete(cfg, numeric);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
    if (scatter_cmd->parsed()) return cmd_scatter(cfg);
    if (counter_cmd->parsed()) return cmd_counterexample(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    std::cerr << "warning: " << e.what() << "\n";
    return kOk;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return kVerifierFailure;
  }
  return kOk;
}
