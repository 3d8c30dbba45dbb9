#include "doctest.h"

#include <map>

#include "unimodal/config.hpp"
#include "unimodal/serialize.hpp"

using namespace unimodal;

TEST_CASE("coefficient lists and sets") {
  CHECK(parse_coeff_list("1, 0,-2") == IntPoly{1, 0, -2});
  CHECK(parse_coeff_list("+3,123456789012345678901234567890").coeff(1) == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_coeff_list(""), ParseError);
  CHECK_THROWS_AS(parse_coeff_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_coeff_list("1.5"), ParseError);
  CHECK(parse_coeff_set("-2..2").size() == 5);
  CHECK(parse_coeff_set("0,1,0").size() == 2);
  CHECK(parse_coeff_set("0,1,0").contains(0));
  CHECK_THROWS_AS(parse_coeff_set("3..1"), ParseError);
}

TEST_CASE("polynomial JSON round trips") {
  const IntPoly p{-1, 0, Integer("99999999999999999999").get_si(), 7};
  const IntPoly big(std::vector<Integer>{Integer("-123456789012345678901234567890"), 0, 5});
  for (const IntPoly& q : {p, big, IntPoly{1}}) {
    CHECK(poly_from_json(Json::parse(poly_to_json(q).dump())) == q);
  }
  CHECK(poly_from_json(Json::parse("[1, -2, \"3\"]")) == IntPoly{1, -2, 3});
  CHECK_THROWS_AS(poly_from_json(Json::parse("[1.5]")), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json::parse("{\"a\":1}")), ParseError);
  const CosPoly t{1, 0, -4};
  const Json jt = cos_to_json(t);
  CHECK(jt.dump() == "{\"type\":\"cos\",\"coeffs\":[\"1\",\"0\",\"-4\"]}");
  CHECK(cos_from_json(Json::parse(jt.dump())) == t);
  CHECK_THROWS_AS(cos_from_json(Json::parse("[1]")), ParseError);
}

TEST_CASE("report and census encodings") {
  const ZeroReport r = zero_report(CosPoly{1, 2});
  const Json j = report_to_json(r);
  CHECK(j["nz"] == 2);
  CHECK(j["interior"].size() == 1);
  const Rational lo(j["interior"][0]["lo"].get<std::string>());
  const Rational hi(j["interior"][0]["hi"].get<std::string>());
  CHECK(lo < Rational(-1, 2));
  CHECK(Rational(-1, 2) < hi);

  const EnumSummary s = census(6, Family::SelfReciprocalLittlewood);
  CHECK(census_csv_row(s) == "sr-littlewood,6,16,2,6,4,2,\"{\"\"2\"\":4,\"\"4\"\":8,\"\"6\"\":4}\"");
  const Json js = summary_to_json(s);
  CHECK(js["avg_nz"] == "4");
  CHECK(js["histogram"]["4"] == 8);

  FeketeRow row;
  row.p = 101;
  row.nz = 51;
  row.fraction = Rational(51, 101);
  row.fraction_reduced = Rational(51, 99);
  row.fraction_reduced.canonicalize();
  CHECK(fekete_csv_row(row) == "101,51,51/101,17/33,0.50495049505,self-reciprocal,");
}

TEST_CASE("config round trip and precedence") {
  RunConfig c;
  c.command = "scatter";
  c.n_lo = 8;
  c.n_hi = 16;
  c.epsilon = 0.1;
  c.quad_tol = 1.0 / 3.0;
  c.workers = 3;
  c.output = "out.csv";
  const RunConfig back = RunConfig::from_text(c.to_text());
  CHECK(back.to_text() == c.to_text());
  CHECK(back.quad_tol == c.quad_tol);
  CHECK(back.epsilon == c.epsilon);

  const RunConfig file = RunConfig::from_text("# comment\nworkers = 2\nenum_budget=5\n\ndm_budget = 7\n");
  CHECK(file.workers == 2);
  CHECK(file.enum_budget == 5);
  RunConfig env = file;
  const std::map<std::string, std::string> vars{{"UNIMODAL_WORKERS", "4"}, {"UNIMODAL_QUAD_TOL", "1e-6"}};
  env.apply_env([&](const std::string& k) -> std::optional<std::string> {
    auto it = vars.find(k);
    if (it == vars.end()) return std::nullopt;
    return it->second;
  });
  CHECK(env.workers == 4);
  CHECK(env.quad_tol == 1e-6);
  CHECK(env.dm_budget == 7);
  env.set("workers", "5");
  CHECK(env.workers == 5);

  CHECK_THROWS_AS(RunConfig::from_text("nonsense = 1\n"), ParseError);
  CHECK_THROWS_AS(RunConfig::from_text("workers = -1\n"), ParseError);
  CHECK_THROWS_AS(RunConfig::from_text("no equals sign\n"), ParseError);
  RunConfig bad;
  bad.epsilon = 1.0;
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
  bad.epsilon = 0.5;
  bad.enum_budget = 0;
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
  CHECK(parse_range("1..16") == std::pair<std::uint64_t, std::uint64_t>{1, 16});
  CHECK(parse_range("7") == std::pair<std::uint64_t, std::uint64_t>{7, 7});
  CHECK_THROWS_AS(parse_range("5..2"), ParseError);
}
