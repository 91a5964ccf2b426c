#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "borderbases/errors.hpp"

namespace borderbases {

// A power product x1^a1 ... xn^an, represented by its exponent vector.
class Term {
public:
  explicit Term(std::size_t arity) : exps_(arity, 0) {}
  explicit Term(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

  static Term one(std::size_t arity) { return Term(arity); }

  static Term variable(std::size_t arity, std::size_t var) {
    Term t(arity);
    t.exps_[var] = 1;
    return t;
  }

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint32_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
  }

  bool is_one() const {
    for (auto e : exps_)
      if (e != 0) return false;
    return true;
  }

  std::size_t variable_count() const {
    std::size_t k = 0;
    for (auto e : exps_)
      if (e != 0) ++k;
    return k;
  }

  Term operator*(const Term& o) const {
    check_arity(o);
    Term r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  Term times_variable(std::size_t var) const {
    Term r(*this);
    ++r.exps_[var];
    return r;
  }

  bool divides(const Term& o) const {
    check_arity(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  // Quotient this / o; requires o | this.
  Term divided_by(const Term& o) const {
    check_arity(o);
    Term r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (o.exps_[i] > exps_[i]) throw DomainError("term quotient of a non-divisor");
      r.exps_[i] -= o.exps_[i];
    }
    return r;
  }

  bool operator==(const Term& o) const { return exps_ == o.exps_; }
  bool operator!=(const Term& o) const { return exps_ != o.exps_; }

  // Textual form "x1^2*x2"; "1" for the unit term.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(i + 1);
      if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

  static Term parse(std::string_view text, std::size_t arity);

private:
  void check_arity(const Term& o) const {
    if (exps_.size() != o.exps_.size())
      throw ArityError("terms of arity " + std::to_string(exps_.size()) + " and " +
                       std::to_string(o.exps_.size()));
  }

  std::vector<std::uint32_t> exps_;
};

// Degree, then degrevlex with x1 > x2 > ... > xn. Used as the canonical order
// for term sets, polynomial storage and deterministic iteration everywhere.
inline int canonical_compare(const Term& a, const Term& b) {
  if (a.arity() != b.arity())
    throw ArityError("comparing terms of different arity");
  std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a.exponent(i) != b.exponent(i))
      return a.exponent(i) > b.exponent(i) ? -1 : 1;  // larger trailing exponent is smaller
  }
  return 0;
}

struct CanonicalLess {
  bool operator()(const Term& a, const Term& b) const { return canonical_compare(a, b) < 0; }
};

inline Term Term::parse(std::string_view text, std::size_t arity) {
  Term t(arity);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '1' && pos + 1 == text.size()) return t;
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    if (!first) {
      if (text[pos] != '*') throw InputError("expected '*' in term '" + std::string(text) + "'");
      ++pos;
      skip_ws();
    }
    first = false;
    if (pos >= text.size() || text[pos] != 'x')
      throw InputError("expected variable in term '" + std::string(text) + "'");
    ++pos;
    std::size_t var = 0;
    if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
      throw InputError("expected variable index in term '" + std::string(text) + "'");
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
      var = var * 10 + static_cast<std::size_t>(text[pos++] - '0');
    if (var < 1 || var > arity)
      throw InputError("variable index out of range in term '" + std::string(text) + "'");
    std::uint32_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
        throw InputError("expected exponent in term '" + std::string(text) + "'");
      exp = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
        exp = exp * 10 + static_cast<std::uint32_t>(text[pos++] - '0');
    }
    t.exps_[var - 1] += exp;
    skip_ws();
  }
  return t;
}

}  // namespace borderbases
