#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "borderbases/enumeration.hpp"
#include "borderbases/field.hpp"
#include "borderbases/order_ideal.hpp"
#include "borderbases/point_set.hpp"
#include "borderbases/polynomial.hpp"
#include "borderbases/verify.hpp"

namespace borderbases {

using json = nlohmann::ordered_json;

inline json field_to_json(const FieldSpec& spec) {
  if (spec.is_rationals()) return json("Q");
  return json{{"p", spec.modulus()}};
}

inline FieldSpec field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return FieldSpec::rationals();
    throw InputError("unknown field \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.contains("p")) return FieldSpec::prime_field(j["p"].get<std::uint64_t>());
  throw InputError("field must be \"Q\" or {\"p\": <prime>}");
}

inline json term_to_json(const Term& t) {
  json out = json::array();
  for (auto e : t.exponents()) out.push_back(e);
  return out;
}

inline Term term_from_json(const json& j, std::size_t arity) {
  if (!j.is_array() || j.size() != arity)
    throw InputError("exponent vector must be an array of length " + std::to_string(arity));
  std::vector<std::uint32_t> exps;
  exps.reserve(arity);
  for (const auto& e : j) exps.push_back(e.get<std::uint32_t>());
  return Term(std::move(exps));
}

template <typename K>
json polynomial_to_json(const Polynomial<K>& f) {
  json out = json::array();
  for (const auto& [t, c] : f) out.push_back(json{{"exponents", term_to_json(t)}, {"coeff", c.to_string()}});
  return out;
}

template <typename K>
Polynomial<K> polynomial_from_json(const json& j, const FieldSpec& spec, std::size_t arity) {
  Polynomial<K> f(arity);
  if (!j.is_array()) throw InputError("polynomial must be an array of monomials");
  for (const auto& m : j) {
    Term t = term_from_json(m.at("exponents"), arity);
    K c = parse_element<K>(spec, m.at("coeff").get<std::string>());
    f = f + Polynomial<K>::monomial(std::move(t), std::move(c));
  }
  return f;
}

template <typename K>
json pair_to_json(const BorderPair<K>& pair) {
  json oi = json::array();
  for (const auto& t : pair.order_ideal) oi.push_back(term_to_json(t));
  json basis = json::array();
  for (const auto& g : pair.basis) {
    basis.push_back(json{{"border_term", term_to_json(g.border_term)},
                         {"tail", polynomial_to_json(g.tail)}});
  }
  return json{{"order_ideal", std::move(oi)}, {"basis", std::move(basis)}, {"quasi", pair.quasi}};
}

template <typename K>
BorderPair<K> pair_from_json(const json& j, const FieldSpec& spec, std::size_t arity, const K& one) {
  std::vector<Term> terms;
  for (const auto& t : j.at("order_ideal")) terms.push_back(term_from_json(t, arity));
  OrderIdealSet oi(arity, std::move(terms));
  std::vector<MarkedPolynomial<K>> basis;
  for (const auto& g : j.at("basis")) {
    basis.emplace_back(term_from_json(g.at("border_term"), arity),
                       polynomial_from_json<K>(g.at("tail"), spec, arity), one);
  }
  sort_basis(basis);
  return BorderPair<K>{std::move(oi), std::move(basis), j.at("quasi").get<bool>()};
}

template <typename K>
json enumeration_to_json(const EnumerationResult<K>& result, const FieldSpec& spec, std::size_t arity,
                         std::size_t s, const std::string& command, const std::string& engine, bool quasi) {
  json pairs = json::array();
  for (const auto& p : result.pairs) pairs.push_back(pair_to_json(p));
  return json{{"command", command},
              {"engine", engine},
              {"field", field_to_json(spec)},
              {"n", arity},
              {"s", s},
              {"quasi", quasi},
              {"pair_count", result.pairs.size()},
              {"raw_count", result.raw_count},
              {"branch_count", result.branch_count},
              {"pairs", std::move(pairs)}};
}

inline json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"pass", report.pass()}, {"checks", std::move(checks)}};
}

// Field-agnostic parse result; realize_points() turns it into a typed set.
struct ParsedPointFile {
  FieldSpec spec = FieldSpec::rationals();
  std::size_t arity = 0;
  std::vector<std::vector<std::string>> coordinates;
};

inline ParsedPointFile parse_point_file_json(const std::string& contents) {
  json j;
  try {
    j = json::parse(contents);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("point file: " + std::string(e.what()));
  }
  ParsedPointFile out;
  out.spec = field_from_json(j.at("field"));
  out.arity = j.at("n").get<std::size_t>();
  if (!j.contains("points") || !j["points"].is_array())
    throw InputError("point file: missing \"points\" array");
  for (const auto& p : j["points"]) {
    std::vector<std::string> coords;
    if (!p.is_array() || p.size() != out.arity)
      throw InputError("point file: point " + std::to_string(out.coordinates.size() + 1) +
                       " does not have " + std::to_string(out.arity) + " coordinates");
    for (const auto& c : p) {
      if (c.is_string()) coords.push_back(c.get<std::string>());
      else if (c.is_number_integer()) coords.push_back(std::to_string(c.get<long long>()));
      else throw InputError("point file: coordinates must be strings or integers");
    }
    out.coordinates.push_back(std::move(coords));
  }
  return out;
}

// One point per line, coordinates whitespace-separated. '#' starts a comment.
// An optional leading line "field Q" or "field <prime>" selects the field;
// the default is Q.
inline ParsedPointFile parse_point_file_text(const std::string& contents) {
  ParsedPointFile out;
  std::istringstream in(contents);
  std::string line;
  std::size_t line_no = 0;
  bool saw_field = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0] == "field") {
      if (saw_field || !out.coordinates.empty())
        throw InputError("line " + std::to_string(line_no) + ": field header must come first");
      if (tokens.size() != 2) throw InputError("line " + std::to_string(line_no) + ": expected 'field Q' or 'field <prime>'");
      out.spec = tokens[1] == "Q" ? FieldSpec::rationals()
                                  : FieldSpec::prime_field(std::stoull(tokens[1]));
      saw_field = true;
      continue;
    }
    if (out.coordinates.empty()) {
      out.arity = tokens.size();
    } else if (tokens.size() != out.arity) {
      throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(out.arity) +
                       " coordinates, got " + std::to_string(tokens.size()));
    }
    out.coordinates.push_back(std::move(tokens));
  }
  if (out.coordinates.empty()) throw InputError("point file contains no points");
  return out;
}

inline ParsedPointFile parse_point_file(const std::string& contents) {
  for (char c : contents) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_point_file_json(contents) : parse_point_file_text(contents);
  }
  throw InputError("point file is empty");
}

template <typename K>
PointSet<K> realize_points(const ParsedPointFile& parsed) {
  std::vector<std::vector<K>> points;
  points.reserve(parsed.coordinates.size());
  for (const auto& coords : parsed.coordinates) {
    std::vector<K> p;
    p.reserve(coords.size());
    for (const auto& c : coords) p.push_back(parse_element<K>(parsed.spec, c));
    points.push_back(std::move(p));
  }
  return PointSet<K>(parsed.spec, parsed.arity, std::move(points));
}

// Parser for the textual polynomial form, e.g. "x1*x2 + x1^2 - x1 - 1/2*x2^2".
template <typename K>
Polynomial<K> parse_polynomial(std::string_view text, std::size_t arity, const FieldSpec& spec) {
  Polynomial<K> result(arity);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_number = [&]() -> std::string {
    std::string num;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num += text[pos++];
    if (pos < text.size() && text[pos] == '/') {
      num += text[pos++];
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num += text[pos++];
    }
    return num;
  };

  skip_ws();
  if (pos == text.size()) throw InputError("empty polynomial");
  if (text.compare(pos, 1, "0") == 0 && pos + 1 == text.size()) return result;

  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    bool negative = false;
    if (!first || text[pos] == '+' || text[pos] == '-') {
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '-'))
        throw InputError("expected '+' or '-' at offset " + std::to_string(pos) + " in '" +
                         std::string(text) + "'");
      negative = text[pos] == '-';
      ++pos;
      skip_ws();
    }
    first = false;

    std::string coeff_text;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      coeff_text = parse_number();

    Term t(arity);
    bool saw_var = false;
    skip_ws();
    while (pos < text.size() && (text[pos] == 'x' || text[pos] == '*')) {
      if (text[pos] == '*') {
        ++pos;
        skip_ws();
        continue;
      }
      std::size_t start = pos;
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      }
      t = t * Term::parse(text.substr(start, pos - start), arity);
      saw_var = true;
      skip_ws();
    }

    if (coeff_text.empty() && !saw_var)
      throw InputError("expected monomial at offset " + std::to_string(pos) + " in '" +
                       std::string(text) + "'");
    K c = coeff_text.empty() ? parse_element<K>(spec, "1") : parse_element<K>(spec, coeff_text);
    if (negative) c = -c;
    result = result + Polynomial<K>::monomial(std::move(t), std::move(c));
    skip_ws();
  }
  return result;
}

}  // namespace borderbases
