#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "borderbases/errors.hpp"
#include "borderbases/term.hpp"

namespace borderbases {

// A finite set of terms, kept sorted in canonical order. Candidate for the
// order-ideal / quasi-order-ideal predicates below; also the dedup key for
// enumeration results.
class OrderIdealSet {
public:
  explicit OrderIdealSet(std::size_t arity) : arity_(arity) {}

  OrderIdealSet(std::size_t arity, std::vector<Term> terms) : arity_(arity), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.arity() != arity_) throw ArityError("term arity does not match set arity");
    std::sort(terms_.begin(), terms_.end(), CanonicalLess{});
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
  }

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool contains(const Term& t) const {
    return std::binary_search(terms_.begin(), terms_.end(), t, CanonicalLess{});
  }

  // Copy with one more term; no-op if already present.
  OrderIdealSet with(const Term& t) const {
    if (t.arity() != arity_) throw ArityError("term arity does not match set arity");
    OrderIdealSet r(*this);
    auto it = std::lower_bound(r.terms_.begin(), r.terms_.end(), t, CanonicalLess{});
    if (it == r.terms_.end() || !(*it == t)) r.terms_.insert(it, t);
    return r;
  }

  bool operator==(const OrderIdealSet& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const OrderIdealSet& o) const { return !(*this == o); }

  bool operator<(const OrderIdealSet& o) const {
    return std::lexicographical_compare(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                        CanonicalLess{});
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += ", ";
      out += terms_[i].to_string();
    }
    return out + "}";
  }

private:
  std::size_t arity_;
  std::vector<Term> terms_;  // canonical ascending, unique
};

inline bool divides(const Term& t, const Term& u) { return t.divides(u); }

// Closed under divisors. Checking the maximal proper divisors t/x_i of every
// member suffices by induction on the degree.
inline bool is_order_ideal(const OrderIdealSet& s) {
  for (const auto& t : s) {
    for (std::size_t v = 0; v < s.arity(); ++v) {
      if (t.exponent(v) == 0) continue;
      Term parent = t;
      parent = parent.divided_by(Term::variable(s.arity(), v));
      if (!s.contains(parent)) return false;
    }
  }
  return true;
}

// Border of an arbitrary term set: (x_1 s ∪ ... ∪ x_n s) \ s, with the empty
// set bordered by {1}.
inline std::vector<Term> border(const OrderIdealSet& s) {
  if (s.empty()) return {Term::one(s.arity())};
  std::vector<Term> out;
  for (const auto& t : s) {
    for (std::size_t v = 0; v < s.arity(); ++v) {
      Term u = t.times_variable(v);
      if (!s.contains(u)) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Contains 1, and every non-unit member t lies in the border of s \ {t}.
inline bool is_quasi_order_ideal(const OrderIdealSet& s) {
  Term unit = Term::one(s.arity());
  if (!s.contains(unit)) return false;
  for (const auto& t : s) {
    if (t.is_one()) continue;
    bool connected = false;
    for (std::size_t v = 0; v < s.arity() && !connected; ++v) {
      if (t.exponent(v) == 0) continue;
      Term parent = t.divided_by(Term::variable(s.arity(), v));
      if (s.contains(parent)) connected = true;  // parent != t since degrees differ
    }
    if (!connected) return false;
  }
  return true;
}

// Least k such that t = t_i * t'' with t_i in s and deg(t'') = k; equivalently
// deg(t) minus the largest degree of a member dividing t.
inline std::uint32_t index_of(const OrderIdealSet& s, const Term& t) {
  if (t.arity() != s.arity()) throw ArityError("term arity does not match set arity");
  if (!is_order_ideal(s)) throw DomainError("index is defined relative to an order ideal");
  bool found = false;
  std::uint32_t best = 0;
  for (const auto& m : s) {
    if (m.divides(t)) {
      found = true;
      best = std::max(best, m.degree());
    }
  }
  if (!found) throw IndexUndefined("no member of " + s.to_string() + " divides " + t.to_string());
  return t.degree() - best;
}

// Terms t outside s such that s ∪ {t} is still an order ideal: the subset of
// the border whose proper divisors all lie in s. For the empty set this is {1}.
inline std::vector<Term> expand_candidates(const OrderIdealSet& s) {
  std::vector<Term> out;
  for (const auto& b : border(s)) {
    bool ok = true;
    for (std::size_t v = 0; v < s.arity() && ok; ++v) {
      if (b.exponent(v) == 0) continue;
      Term parent = b.divided_by(Term::variable(s.arity(), v));
      if (!s.contains(parent)) ok = false;
    }
    if (ok) out.push_back(b);
  }
  return out;  // border() already sorted canonically
}

}  // namespace borderbases
