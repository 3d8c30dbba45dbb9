#include "unimodal/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "unimodal/analysis.hpp"

namespace unimodal {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

Integer parse_integer(const std::string& raw) {
  const std::string s = trim(raw);
  std::size_t i = s.size() > 0 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("not an integer: '" + raw + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw ParseError("not an integer: '" + raw + "'");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Json integers(std::span<const Integer> values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(v.get_str());
  return a;
}

std::vector<Integer> integers_from(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient array");
  std::vector<Integer> out;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      out.emplace_back(std::to_string(v.get<long long>()));
    } else if (v.is_string()) {
      out.push_back(parse_integer(v.get<std::string>()));
    } else {
      throw ParseError("coefficient must be an integer or a decimal string");
    }
  }
  return out;
}

}  // namespace

std::string rational_text(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

IntPoly parse_coeff_list(const std::string& text) {
  std::vector<Integer> c;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) c.push_back(parse_integer(field));
  if (c.empty()) throw ParseError("empty coefficient list");
  return IntPoly(std::move(c));
}

CoeffSet parse_coeff_set(const std::string& text) {
  const auto range = text.find("..");
  std::set<Integer> s;
  if (range != std::string::npos) {
    const Integer lo = parse_integer(text.substr(0, range));
    const Integer hi = parse_integer(text.substr(range + 2));
    if (lo > hi || hi - lo > 100000) throw ParseError("bad coefficient range: " + text);
    for (Integer v = lo; v <= hi; ++v) s.insert(v);
  } else {
    std::stringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) s.insert(parse_integer(field));
    if (s.empty()) throw ParseError("empty coefficient set");
  }
  return CoeffSet(std::move(s));
}

Json poly_to_json(const IntPoly& p) { return integers(p.coeffs()); }

IntPoly poly_from_json(const Json& j) { return IntPoly(integers_from(j)); }

Json cos_to_json(const CosPoly& t) {
  Json j;
  j["type"] = "cos";
  j["coeffs"] = integers(t.coeffs());
  return j;
}

CosPoly cos_from_json(const Json& j) {
  if (!j.is_object() || j.value("type", "") != "cos" || !j.contains("coeffs")) {
    throw ParseError("expected {\"type\":\"cos\",\"coeffs\":[...]}");
  }
  return CosPoly(integers_from(j["coeffs"]));
}

Json report_to_json(const ZeroReport& r) {
  Json j;
  j["nz"] = r.nz;
  j["nz_star"] = r.nz_star;
  j["mult_at_plus1"] = r.mult_at_plus1;
  j["mult_at_minus1"] = r.mult_at_minus1;
  Json roots = Json::array();
  for (const auto& iv : r.interior) {
    Json e;
    e["lo"] = rational_text(iv.lo);
    e["hi"] = rational_text(iv.hi);
    e["multiplicity"] = iv.multiplicity;
    roots.push_back(e);
  }
  j["interior"] = roots;
  return j;
}

Json summary_to_json(const EnumSummary& s) {
  Json j;
  j["family"] = family_name(s.family);
  j["degree"] = s.degree;
  j["count"] = s.count;
  j["min_nz"] = s.min_nz;
  j["max_nz"] = s.max_nz;
  j["avg_nz"] = rational_text(s.avg_nz);
  Json h = Json::object();
  for (const auto& [k, v] : s.histogram) h[std::to_string(k)] = v;
  j["histogram"] = h;
  if (s.argmin_mask) {
    j["argmin_mask"] = *s.argmin_mask;
    j["argmin"] = poly_to_json(s.argmin);
  }
  return j;
}

std::string reduction_name(Reduction r) {
  switch (r) {
    case Reduction::SelfReciprocal: return "self-reciprocal";
    case Reduction::AntiReciprocal: return "anti-reciprocal";
    case Reduction::ReciprocalProduct: return "reciprocal-product";
  }
  return "unknown";
}

Json fekete_to_json(const FeketeRow& row) {
  Json j;
  j["p"] = row.p;
  j["nz"] = row.nz;
  j["fraction"] = rational_text(row.fraction);
  j["fraction_reduced"] = rational_text(row.fraction_reduced);
  j["reduction"] = reduction_name(row.reduction);
  if (row.numeric_nz) j["numeric_nz"] = *row.numeric_nz;
  return j;
}

std::string census_csv_header() { return "family,n,count,min_nz,max_nz,avg_nz,argmin_mask,histogram"; }

std::string census_csv_row(const EnumSummary& s) {
  Json h = Json::object();
  for (const auto& [k, v] : s.histogram) h[std::to_string(k)] = v;
  return family_name(s.family) + "," + std::to_string(s.degree) + "," + std::to_string(s.count) + "," +
         (s.count ? std::to_string(s.min_nz) : "") + "," + (s.count ? std::to_string(s.max_nz) : "") + "," +
         (s.count ? rational_text(s.avg_nz) : "") + "," +
         (s.argmin_mask ? std::to_string(*s.argmin_mask) : "") + "," + csv_field(h.dump());
}

std::string fekete_csv_header() { return "p,nz,fraction,fraction_reduced,fraction_double,reduction,numeric_nz"; }

std::string fekete_csv_row(const FeketeRow& row) {
  char frac[32];
  std::snprintf(frac, sizeof frac, "%.12g", row.fraction.get_d());
  return std::to_string(row.p) + "," + std::to_string(row.nz) + "," + rational_text(row.fraction) + "," +
         rational_text(row.fraction_reduced) + "," + frac + "," + reduction_name(row.reduction) + "," +
         (row.numeric_nz ? std::to_string(*row.numeric_nz) : "");
}

}  // namespace unimodal
