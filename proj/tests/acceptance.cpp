// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "unimodal/families.hpp"
#include "unimodal/machinery.hpp"
#include "unimodal/numeric_roots.hpp"
#include "unimodal/suites.hpp"
#include "unimodal/zerocount.hpp"

using namespace unimodal;

namespace {

// Pinned limits.
constexpr double kExactCountSeconds = 1.0;
constexpr double kCounterexampleSeconds = 10.0;
constexpr double kFeketeMeanLo = 0.45;
constexpr double kFeketeMeanHi = 0.55;
constexpr double kSuitesSeconds = 600.0;
constexpr std::uint64_t kSuiteSeed = 7;
constexpr std::uint64_t kOracleSeed = 20240601;
constexpr std::size_t kOracleInstances = 1000;
constexpr std::size_t kOracleMaxDegree = 30;
constexpr double kScatterEpsilon = 0.1;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(t0));
  std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << title << " (" << timing << ")" << o.detail.str()
            << std::endl;
  failures += !o.pass;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string capture(const std::string& args, int& code) {
  const std::string cmd = std::string(UNIMODAL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[1 << 14];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

void exact_counts(Outcome& o) {
  const auto t0 = Clock::now();
  const std::uint64_t a = nz_unimodular_any(IntPoly{1, 1, 1, 1, 1}).nz;
  const std::uint64_t b = nz_unimodular_any(IntPoly{1, 1, 1}).nz;
  const IntPoly skew{1, 1, -1, -1, 1};
  const std::uint64_t c = nz_unimodular_any(skew).nz;
  const double t = seconds_since(t0);
  o.detail << " nz=" << a << "," << b << "," << c << " skew=" << is_skew_reciprocal(skew);
  o.require(a == 4, "1+z+z^2+z^3+z^4 has 4");
  o.require(b == 2, "1+z+z^2 has 2");
  o.require(c == 0, "1+z-z^2-z^3+z^4 has 0");
  o.require(t < kExactCountSeconds, "runtime < 1 s");
}

void small_degree_census(Outcome& o) {
  std::ostringstream mins;
  for (std::size_t n = 1; n <= 20; ++n) {
    const EnumSummary s = census(n, Family::SelfReciprocalLittlewood);
    mins << (n > 1 ? "," : "") << s.min_nz;
    const std::string tag = "n=" + std::to_string(n);
    o.require(s.min_nz >= 1, tag + " min >= 1");
    // Degree 1 members are +-(1 + z), with the single zero -1; the odd-degree fact starts at n = 3.
    if (n % 2 == 1 && n >= 3) o.require(s.min_nz >= 3, tag + " odd min >= 3");
    if (n % 2 == 1 && n >= 7) {
      std::ostringstream w;
      w << tag << " odd min >= 5, got " << s.min_nz << " at [";
      for (std::size_t j = 0; j <= n; ++j) w << (j ? "," : "") << s.argmin.coeff(j).get_si();
      w << "]";
      o.require(s.min_nz >= 5, w.str());
    }
    if (n % 2 == 0 && n >= 14) o.require(s.min_nz >= 4, tag + " even min >= 4");
    o.require(s.avg_nz * 4 >= Rational(static_cast<unsigned long>(n)),
              tag + " avg " + rational_str(s.avg_nz) + " >= n/4");
  }
  o.detail << " min_nz(n=1..20)=" << mins.str();
}

void counterexample_family(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t good = 0;
  for (std::size_t n = 1; n <= 50; ++n) {
    const bool identity = counterexample_residual(n).is_zero();
    const ZeroReport r = zero_report(counterexample_T(n));
    const bool ok = identity && r.nz == 2 && r.nz_star == 2;
    good += ok;
    o.require(ok, "n=" + std::to_string(n));
  }
  const double t = seconds_since(t0);
  o.detail << " " << good << "/50";
  o.require(t < kCounterexampleSeconds, "runtime < 10 s");
}

void fekete_fractions(Outcome& o) {
  std::size_t vanish = 0, primes_small = 0;
  for (std::uint64_t p = 3; p <= 2003; ++p) {
    if (!is_prime(p)) continue;
    ++primes_small;
    vanish += fekete(p).eval(1) == 0;
  }
  o.require(vanish == primes_small, "f_p(1) = 0 for primes <= 2003");

  double sum = 0, lo_mean = 1, hi_mean = 0;
  std::size_t count = 0, checked = 0, agree = 0;
  for (std::uint64_t p = 101; p <= 1009; ++p) {
    if (!is_prime(p)) continue;
    const bool cross = p % 4 == 1;
    const FeketeRow row = fekete_zero_fraction(p, {cross});
    sum += row.fraction.get_d();
    ++count;
    const double mean = sum / static_cast<double>(count);
    lo_mean = std::min(lo_mean, mean);
    hi_mean = std::max(hi_mean, mean);
    if (cross) {
      ++checked;
      const bool ok = row.numeric_nz && *row.numeric_nz == row.nz;
      agree += ok;
      o.require(ok, "oracle disagrees at p=" + std::to_string(p));
    }
  }
  o.detail << " primes<=2003:" << vanish << "/" << primes_small << " range primes:" << count
           << " mean=" << sum / static_cast<double>(count) << " running in [" << lo_mean << "," << hi_mean
           << "] oracle " << agree << "/" << checked;
  o.require(lo_mean > kFeketeMeanLo && hi_mean < kFeketeMeanHi, "running mean in (0.45, 0.55)");
}

void inequality_suites(Outcome& o) {
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, std::uint64_t>> plan{
      {"littlewood-l1", 200}, {"arc-l1", 100},   {"antiderivative", 100}, {"level-crossings", 50},
      {"solve-bound", 10000}, {"small-runs", 0}, {"term-count", 0},       {"nc-ph", 0},
      {"totient", 0},         {"lcm", 0}};
  for (const auto& [name, count] : plan) {
    SuiteOptions opts;
    opts.seed = kSuiteSeed;
    opts.count = count ? count : 1;
    const SuiteResult r = run_suite(name, opts);
    o.detail << " " << name << ":" << (r.rows.size() - r.failures()) << "/" << r.rows.size();
    if (!r.skipped.empty()) o.detail << "(+" << r.skipped.size() << " over budget)";
    o.require(r.pass() && !r.rows.empty(), name);
  }
  o.require(seconds_since(t0) < kSuitesSeconds, "runtime < 10 min");
}

void oracle_equivalence(Outcome& o) {
  const CoeffSet s{-2, -1, 0, 1, 2};
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < kOracleInstances; ++i) {
    const std::uint64_t seed = instance_seed(kOracleSeed, i);
    const std::size_t degree = 1 + seed % kOracleMaxDegree;
    const IntPoly p = random_self_reciprocal(s, degree, seed);
    const std::uint64_t exact = nz_unimodular(p);
    const std::uint64_t numeric = numeric_unimodular_count(p);
    if (exact != numeric) {
      ++mismatches;
      o.require(false, "instance " + std::to_string(i) + ": exact " + std::to_string(exact) + " vs numeric " +
                           std::to_string(numeric));
    }
  }
  o.detail << " " << kOracleInstances - mismatches << "/" << kOracleInstances << " agree";
}

void scatter_determinism(Outcome& o) {
  char eps[32];
  std::snprintf(eps, sizeof eps, "%g", kScatterEpsilon);
  const std::string args = std::string("scatter --family sr-littlewood --n 1..16 --eps ") + eps;
  int c1 = 0, c2 = 0, c3 = 0;
  const std::string a = capture(args + " --workers 1", c1);
  const std::string b = capture(args + " --workers 1", c2);
  const std::string c = capture(args + " --workers 3", c3);
  o.require(c1 == 0 && c2 == 0 && c3 == 0, "exit status");
  o.require(a == b, "rerun byte-identical");
  o.require(a == c, "workers 1 vs 3 byte-identical");

  std::uint64_t expected = 0;
  for (std::size_t n = 1; n <= 16; ++n) expected += family_size(n, Family::SelfReciprocalLittlewood);
  const std::vector<std::string> lines = split(a, '\n');
  o.require(!lines.empty() && lines.front() == scatter_header(), "header");
  std::size_t rows = 0, bad = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    ++rows;
    const std::vector<std::string> f = split(lines[i], ',');
    bool ok = f.size() == 10 && f[0].rfind("sr-littlewood/", 0) == 0;
    if (ok) {
      try {
        const unsigned long degree = std::stoul(f[1]);
        const double abs_p1 = std::stod(f[2]);
        const unsigned long nz = std::stoul(f[3]);
        const unsigned long nz_star = std::stoul(f[4]);
        ok = degree >= 1 && degree <= 16 && abs_p1 >= 0 && nz_star <= nz && nz <= degree && nz_star % 2 == 0 &&
             std::stod(f[5]) == kScatterEpsilon && (f[6] == "NA" || std::stod(f[6]) > 0);
        for (int k = 7; k <= 9; ++k) ok = ok && std::stoul(f[k]) <= degree + 1;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    bad += !ok;
  }
  o.detail << " rows=" << rows << "/" << expected << " malformed=" << bad << " bytes=" << a.size();
  o.require(rows == expected, "row count");
  o.require(bad == 0, "schema");
}

}  // namespace

int main() {
  report(1, "exact counts of the reference polynomials", exact_counts);
  report(2, "small-degree census facts for self-reciprocal Littlewood polynomials, n <= 20", small_degree_census);
  report(3, "cosine counterexample family, n = 1..50", counterexample_family);
  report(4, "Fekete polynomials: vanishing at 1, zero fractions, oracle agreement", fekete_fractions);
  report(5, "inequality suites", inequality_suites);
  report(6, "exact counts vs numeric oracle on random self-reciprocal polynomials", oracle_equivalence);
  report(7, "bound scatter: schema and determinism", scatter_determinism);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
