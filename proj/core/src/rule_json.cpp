#include "advect/rule_json.hpp"

#include "advect/errors.hpp"

#include "json.hpp"

#include <fmt/format.h>

namespace advect {

using nlohmann::json;

namespace {

json polynomial_json(const NuPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back({c.numerator(), c.denominator()});
  return out;
}

json table_json(const TwoMomentRule& rule, NuPolynomial (TwoMomentRule::*entry)(int) const) {
  json out = json::array();
  for (int m : rule.offsets()) out.push_back(polynomial_json((rule.*entry)(m)));
  return out;
}

NuPolynomial polynomial_from(const json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be an array of [num, den] pairs");
  std::vector<Rational> coeffs;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw InvalidInput("polynomial coefficient must be an integer pair [num, den]");
    }
    const auto den = pair[1].get<std::int64_t>();
    if (den == 0) throw InvalidInput("zero denominator in polynomial coefficient");
    coeffs.emplace_back(pair[0].get<std::int64_t>(), den);
  }
  return NuPolynomial(std::move(coeffs));
}

CoefficientMap table_from(const json& doc, const char* key, const std::vector<int>& offsets) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw InvalidInput(fmt::format("rule JSON lacks table '{}'", key));
  }
  const json& table = doc[key];
  if (table.size() != offsets.size()) {
    throw InvalidInput(fmt::format("table '{}' has {} entries for {} offsets", key,
                                   table.size(), offsets.size()));
  }
  CoefficientMap out;
  for (std::size_t k = 0; k < offsets.size(); ++k) out[offsets[k]] = polynomial_from(table[k]);
  return out;
}

}  // namespace

std::string rule_to_json(const TwoMomentRule& rule, int indent) {
  json doc;
  doc["scheme_id"] = rule.scheme_id().name();
  doc["offsets"] = rule.offsets();
  doc["a"] = table_json(rule, &TwoMomentRule::a);
  doc["b"] = table_json(rule, &TwoMomentRule::b);
  doc["c"] = table_json(rule, &TwoMomentRule::c);
  doc["d"] = table_json(rule, &TwoMomentRule::d);
  doc["slope_row"] =
      rule.slope_row() == SlopeRow::reconstructed ? "reconstructed" : "incremental";
  return doc.dump(indent);
}

TwoMomentRule rule_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(fmt::format("rule JSON does not parse: {}", e.what()));
  }
  if (!doc.is_object()) throw InvalidInput("rule JSON must be an object");
  if (!doc.contains("scheme_id") || !doc["scheme_id"].is_string()) {
    throw InvalidInput("rule JSON lacks string 'scheme_id'");
  }
  if (!doc.contains("offsets") || !doc["offsets"].is_array()) {
    throw InvalidInput("rule JSON lacks array 'offsets'");
  }
  std::vector<int> offsets;
  for (const auto& m : doc["offsets"]) {
    if (!m.is_number_integer()) throw InvalidInput("offsets must be integers");
    offsets.push_back(m.get<int>());
  }
  SlopeRow slope_row = SlopeRow::incremental;
  if (doc.contains("slope_row")) {
    if (!doc["slope_row"].is_string()) throw InvalidInput("slope_row must be a string");
    const std::string kind = doc["slope_row"].get<std::string>();
    if (kind == "reconstructed") {
      slope_row = SlopeRow::reconstructed;
    } else if (kind != "incremental") {
      throw InvalidInput(fmt::format("unknown slope_row '{}'", kind));
    }
  }
  return TwoMomentRule(SchemeId::parse(doc["scheme_id"].get<std::string>()),
                       table_from(doc, "a", offsets), table_from(doc, "b", offsets),
                       table_from(doc, "c", offsets), table_from(doc, "d", offsets), slope_row);
}

}  // namespace advect
