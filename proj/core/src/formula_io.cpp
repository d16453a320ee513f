#include "radpi/formula_io.hpp"

#include <json.hpp>

#include "radpi/error.hpp"

namespace radpi {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

BigInt integer_field(const nlohmann::json& term, const char* key, std::size_t index) {
  const std::string where = "terms[" + std::to_string(index) + "]." + key;
  if (!term.contains(key)) throw Error(ErrorKind::malformed, where + " is missing");
  const auto& v = term.at(key);
  if (!v.is_string()) throw Error(ErrorKind::malformed, where + " must be a decimal string");
  const std::string s = v.get<std::string>();
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw Error(ErrorKind::malformed, where + " is not a decimal integer: \"" + s + "\"");
  }
  return BigInt(s);
}

int int_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return 0;
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) throw Error(ErrorKind::malformed, std::string(key) + " must be an integer");
  return v.get<int>();
}

}  // namespace

std::optional<FixedReal> document_lehmer(const MachinFormula& f) {
  try {
    LehmerMeasure m = lehmer_measure(f);
    if (!m.all_integer) return std::nullopt;
    return std::move(m.value);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::domain) return std::nullopt;
    throw;
  }
}

std::string formula_to_json(const MachinFormula& f) {
  ordered_json doc;
  doc["target"] = "pi/4";
  doc["k"] = f.provenance.k;
  doc["M"] = f.provenance.M;
  ordered_json terms = ordered_json::array();
  for (const auto& t : f.terms) {
    ordered_json term;
    term["coeff"] = t.coeff.get_str();
    term["arg_num"] = t.arg.num().get_str();
    term["arg_den"] = t.arg.den().get_str();
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  doc["validated"] = f.validated;
  const auto mu = document_lehmer(f);
  doc["lehmer"] = mu ? ordered_json(mu->to_string()) : ordered_json(nullptr);
  return doc.dump(2) + "\n";
}

MachinFormula formula_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::malformed, "formula JSON parse error at " + position(text, e.byte));
  }
  if (!doc.is_object()) throw Error(ErrorKind::malformed, "formula JSON must be an object");
  if (doc.contains("target") && doc.at("target") != "pi/4") {
    throw Error(ErrorKind::malformed, "target must be \"pi/4\"");
  }
  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw Error(ErrorKind::malformed, "terms must be an array");
  }
  MachinFormula f;
  f.provenance = {int_field(doc, "k"), int_field(doc, "M"), GenerationPath::input};
  std::size_t index = 0;
  for (const auto& term : doc.at("terms")) {
    if (!term.is_object()) throw Error(ErrorKind::malformed, "terms[" + std::to_string(index) + "] must be an object");
    BigInt coeff = integer_field(term, "coeff", index);
    BigInt num = integer_field(term, "arg_num", index);
    BigInt den = integer_field(term, "arg_den", index);
    if (den == 0) throw Error(ErrorKind::malformed, "terms[" + std::to_string(index) + "].arg_den is zero");
    f.terms.push_back({std::move(coeff), BigRational(std::move(num), std::move(den))});
    ++index;
  }
  if (f.terms.empty()) throw Error(ErrorKind::malformed, "formula has no terms");
  if (doc.contains("validated")) {
    if (!doc.at("validated").is_boolean()) throw Error(ErrorKind::malformed, "validated must be a boolean");
    f.validated = doc.at("validated").get<bool>();
  }
  return f;
}

}  // namespace radpi
