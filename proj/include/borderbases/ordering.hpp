#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "borderbases/errors.hpp"
#include "borderbases/term.hpp"

namespace borderbases {

// A term ordering: lex, deglex or degrevlex, together with a precedence
// permutation. perm[0] is the most significant variable (0-based index).
class TermOrdering {
public:
  enum class Kind { DegRevLex, DegLex, Lex };

  TermOrdering(Kind kind, std::size_t arity) : kind_(kind), perm_(arity) {
    std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  }

  TermOrdering(Kind kind, std::vector<std::size_t> perm) : kind_(kind), perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (auto v : perm_) {
      if (v >= perm_.size() || seen[v]) throw InputError("invalid variable permutation");
      seen[v] = true;
    }
  }

  static TermOrdering degrevlex(std::size_t arity) { return {Kind::DegRevLex, arity}; }
  static TermOrdering deglex(std::size_t arity) { return {Kind::DegLex, arity}; }
  static TermOrdering lex(std::size_t arity) { return {Kind::Lex, arity}; }

  Kind kind() const { return kind_; }
  std::size_t arity() const { return perm_.size(); }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  // <0, 0, >0 for a < b, a == b, a > b.
  int compare(const Term& a, const Term& b) const {
    if (a.arity() != arity() || b.arity() != arity())
      throw ArityError("term arity does not match ordering arity");
    switch (kind_) {
      case Kind::Lex:
        return lex_compare(a, b);
      case Kind::DegLex: {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return lex_compare(a, b);
      }
      case Kind::DegRevLex: {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        // Scan from the least significant variable; the term with the larger
        // exponent there is the smaller one.
        for (std::size_t k = perm_.size(); k-- > 0;) {
          std::size_t v = perm_[k];
          if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v) ? -1 : 1;
        }
        return 0;
      }
    }
    return 0;
  }

  bool less(const Term& a, const Term& b) const { return compare(a, b) < 0; }
  bool greater(const Term& a, const Term& b) const { return compare(a, b) > 0; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::DegRevLex: return "degrevlex";
      case Kind::DegLex: return "deglex";
      case Kind::Lex: return "lex";
    }
    return "";
  }

private:
  int lex_compare(const Term& a, const Term& b) const {
    for (std::size_t v : perm_) {
      if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v) ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  std::vector<std::size_t> perm_;
};

}  // namespace borderbases
