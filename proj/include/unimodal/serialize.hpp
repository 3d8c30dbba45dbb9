#pragma once

// JSON and CSV encodings. Integers and rationals travel as decimal strings
// ("-12", "3/4") so no precision is lost.

#include <string>

#include "json.hpp"
#include "unimodal/families.hpp"
#include "unimodal/polycore.hpp"
#include "unimodal/zerocount.hpp"

namespace unimodal {

using Json = nlohmann::ordered_json;

std::string rational_text(const Rational& q);

/// "1,0,-2" (a_0 first). Throws ParseError.
IntPoly parse_coeff_list(const std::string& text);
/// "-1,0,1" or "-2..2". Throws ParseError.
CoeffSet parse_coeff_set(const std::string& text);

Json poly_to_json(const IntPoly& p);
/// Accepts an array of integers or decimal strings. Throws ParseError.
IntPoly poly_from_json(const Json& j);
Json cos_to_json(const CosPoly& t);
CosPoly cos_from_json(const Json& j);

Json report_to_json(const ZeroReport& r);
Json summary_to_json(const EnumSummary& s);
Json fekete_to_json(const FeketeRow& row);

std::string reduction_name(Reduction r);

std::string census_csv_header();
std::string census_csv_row(const EnumSummary& s);
std::string fekete_csv_header();
std::string fekete_csv_row(const FeketeRow& row);

}  // namespace unimodal
