#include "unimodal/config.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "unimodal/errors.hpp"

namespace unimodal {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
    throw ParseError(key + ": not a non-negative integer: '" + v + "'");
  }
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) throw ParseError(key + ": not a number: '" + v + "'");
  return d;
}

std::string exact_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_u64("range", trim(text));
    return {v, v};
  }
  const auto lo = parse_u64("range", trim(text.substr(0, dots)));
  const auto hi = parse_u64("range", trim(text.substr(dots + 2)));
  if (lo > hi) throw ParseError("range: empty '" + text + "'");
  return {lo, hi};
}

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "command") command = v;
  else if (key == "n_lo") n_lo = parse_u64(key, v);
  else if (key == "n_hi") n_hi = parse_u64(key, v);
  else if (key == "p_lo") p_lo = parse_u64(key, v);
  else if (key == "p_hi") p_hi = parse_u64(key, v);
  else if (key == "family") family = v;
  else if (key == "coeffs") coeffs = v;
  else if (key == "epsilon") epsilon = parse_double(key, v);
  else if (key == "seed") seed = parse_u64(key, v);
  else if (key == "count") count = parse_u64(key, v);
  else if (key == "suite") suite = v;
  else if (key == "enum_budget") enum_budget = parse_u64(key, v);
  else if (key == "dm_budget") dm_budget = parse_u64(key, v);
  else if (key == "quad_tol") quad_tol = parse_double(key, v);
  else if (key == "workers") workers = static_cast<unsigned>(parse_u64(key, v));
  else if (key == "output") output = v;
  else if (key == "plot") plot = v;
  else throw ParseError("unknown config key '" + key + "'");
}

void RunConfig::validate() const {
  if (enum_budget == 0 || dm_budget == 0 || !(quad_tol > 0) || workers == 0 || count == 0) {
    throw PreconditionError("config: budgets, count and workers must be positive");
  }
  if (!(epsilon > 0 && epsilon < 1)) throw PreconditionError("config: epsilon must lie in (0, 1)");
  if (n_lo > n_hi || p_lo > p_hi) throw PreconditionError("config: empty range");
}

std::string RunConfig::to_text() const {
  std::ostringstream o;
  o << "command = " << command << "\n"
    << "n_lo = " << n_lo << "\n"
    << "n_hi = " << n_hi << "\n"
    << "p_lo = " << p_lo << "\n"
    << "p_hi = " << p_hi << "\n"
    << "family = " << family << "\n"
    << "coeffs = " << coeffs << "\n"
    << "epsilon = " << exact_double(epsilon) << "\n"
    << "seed = " << seed << "\n"
    << "count = " << count << "\n"
    << "suite = " << suite << "\n"
    << "enum_budget = " << enum_budget << "\n"
    << "dm_budget = " << dm_budget << "\n"
    << "quad_tol = " << exact_double(quad_tol) << "\n"
    << "workers = " << workers << "\n"
    << "output = " << output << "\n"
    << "plot = " << plot << "\n";
  return o.str();
}

RunConfig RunConfig::from_text(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(number) + ": expected key = value");
    base.set(trim(t.substr(0, eq)), t.substr(eq + 1));
  }
  return base;
}

void RunConfig::apply_env(const std::function<std::optional<std::string>(const std::string&)>& lookup) {
  if (auto v = lookup("UNIMODAL_ENUM_BUDGET")) set("enum_budget", *v);
  if (auto v = lookup("UNIMODAL_DM_BUDGET")) set("dm_budget", *v);
  if (auto v = lookup("UNIMODAL_QUAD_TOL")) set("quad_tol", *v);
  if (auto v = lookup("UNIMODAL_WORKERS")) set("workers", *v);
}

void RunConfig::apply_process_env() {
  apply_env([](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (!v) return std::nullopt;
    return std::string(v);
  });
}

}  // namespace unimodal
