#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "borderbases/errors.hpp"
#include "borderbases/order_ideal.hpp"
#include "borderbases/term.hpp"

namespace borderbases {

// Sparse multivariate polynomial over K. Terms are kept in canonical
// descending order with no zero coefficients; the zero polynomial is empty.
template <typename K>
class Polynomial {
public:
  using Entry = std::pair<Term, K>;

  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  static Polynomial monomial(Term t, K coeff) {
    Polynomial p(t.arity());
    if (!coeff.is_zero()) p.terms_.emplace_back(std::move(t), std::move(coeff));
    return p;
  }

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Entry>& entries() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  // Leading entry in canonical order; polynomial must be nonzero.
  const Entry& leading() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of zero polynomial");
    return terms_.front();
  }

  const K* coefficient(const Term& t) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, [](const Entry& e, const Term& u) {
      return canonical_compare(e.first, u) > 0;
    });
    if (it != terms_.end() && it->first == t) return &it->second;
    return nullptr;
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, false, nullptr); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true, nullptr); }

  // this + c * o in one pass.
  Polynomial add_scaled(const Polynomial& o, const K& c) const {
    if (c.is_zero()) return *this;
    return merged(o, false, &c);
  }

  Polynomial operator*(const K& c) const {
    Polynomial r(arity_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [t, a] : terms_) {
      K v = a * c;
      if (!v.is_zero()) r.terms_.emplace_back(t, std::move(v));
    }
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& [t, a] : terms_) r.terms_.emplace_back(t, -a);
    return r;
  }

  Polynomial times_term(const Term& t) const {
    Polynomial r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& [u, a] : terms_) r.terms_.emplace_back(u * t, a);
    // multiplying by a fixed term preserves the canonical order
    return r;
  }

  // (x_var - c) * this
  Polynomial times_linear(std::size_t var, const K& c) const {
    Polynomial shifted(arity_);
    shifted.terms_.reserve(terms_.size());
    for (const auto& [u, a] : terms_) shifted.terms_.emplace_back(u.times_variable(var), a);
    return shifted.add_scaled(*this, -c);
  }

  bool operator==(const Polynomial& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  K evaluate(std::span<const K> point) const {
    if (point.size() != arity_) throw ArityError("point arity does not match polynomial arity");
    if (arity_ == 0) throw ArityError("cannot evaluate a polynomial in zero variables");
    K acc = point[0].zero();
    for (const auto& [t, a] : terms_) {
      K v = a;
      for (std::size_t i = 0; i < arity_; ++i) {
        for (std::uint32_t e = 0; e < t.exponent(i); ++e) v *= point[i];
      }
      acc += v;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, a] : terms_) {
      std::string c = a.to_string();
      bool negative = !c.empty() && c[0] == '-';
      std::string mag = negative ? c.substr(1) : c;
      if (out.empty()) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      if (t.is_one()) {
        out += mag;
      } else {
        if (mag != "1") out += mag + "*";
        out += t.to_string();
      }
    }
    return out;
  }

private:
  Polynomial merged(const Polynomial& o, bool subtract, const K* scale) const {
    if (arity_ != o.arity_) throw ArityError("polynomial arity mismatch");
    Polynomial r(arity_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int cmp;
      if (i == terms_.size()) cmp = -1;
      else if (j == o.terms_.size()) cmp = 1;
      else cmp = canonical_compare(terms_[i].first, o.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        K v = o.terms_[j].second;
        if (scale) v = v * *scale;
        if (subtract) v = -v;
        if (!v.is_zero()) r.terms_.emplace_back(o.terms_[j].first, std::move(v));
        ++j;
      } else {
        K v = o.terms_[j].second;
        if (scale) v = v * *scale;
        v = subtract ? terms_[i].second - v : terms_[i].second + v;
        if (!v.is_zero()) r.terms_.emplace_back(terms_[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t arity_;
  std::vector<Entry> terms_;
};

template <typename K>
K evaluate(const Polynomial<K>& f, std::span<const K> point) {
  return f.evaluate(point);
}

// The maximal-index part of f relative to an order ideal.
template <typename K>
Polynomial<K> border_form(const OrderIdealSet& s, const Polynomial<K>& f) {
  if (f.is_zero()) throw ZeroPolynomial("border form of zero polynomial");
  std::uint32_t max_index = 0;
  for (const auto& [t, a] : f) max_index = std::max(max_index, index_of(s, t));
  Polynomial<K> r(f.arity());
  for (const auto& [t, a] : f) {
    if (index_of(s, t) == max_index) r = r + Polynomial<K>::monomial(t, a);
  }
  return r;
}

// Polynomial in (quasi) border prebasis shape: border_term - tail, with the
// border term monic and the tail supported inside the ambient term set. The
// mark is stored, never derived from a term ordering. `unit` is the field's 1,
// kept so that bare marks (empty tails) still know their coefficient field.
template <typename K>
struct MarkedPolynomial {
  Term border_term;
  Polynomial<K> tail;
  K unit;

  MarkedPolynomial(Term bt, Polynomial<K> t, K one)
      : border_term(std::move(bt)), tail(std::move(t)), unit(std::move(one)) {}

  Polynomial<K> full() const {
    return Polynomial<K>::monomial(border_term, unit) - tail;
  }

  std::uint32_t degree() const { return border_term.degree(); }

  K evaluate(std::span<const K> point) const {
    K bt = unit;
    for (std::size_t i = 0; i < border_term.arity(); ++i)
      for (std::uint32_t e = 0; e < border_term.exponent(i); ++e) bt *= point[i];
    return bt - tail.evaluate(point);
  }

  bool operator==(const MarkedPolynomial& o) const {
    return border_term == o.border_term && tail == o.tail;
  }

  // Border term first, regardless of the canonical order of the tail.
  std::string to_string() const {
    std::string out = border_term.to_string();
    std::string rest = (-tail).to_string();
    if (rest == "0") return out;
    if (rest[0] == '-') return out + " - " + rest.substr(1);
    return out + " + " + rest;
  }
};

// A (quasi) order ideal together with the matching marked basis.
template <typename K>
struct BorderPair {
  OrderIdealSet order_ideal;
  std::vector<MarkedPolynomial<K>> basis;  // sorted by border term, canonical order
  bool quasi = false;

  bool operator==(const BorderPair& o) const {
    return order_ideal == o.order_ideal && basis == o.basis && quasi == o.quasi;
  }
};

template <typename K>
void sort_basis(std::vector<MarkedPolynomial<K>>& basis) {
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    return canonical_compare(a.border_term, b.border_term) < 0;
  });
}

// Subtract, for each g in G, (coefficient of g's border term in f) * g.
// The result carries no support on the border terms of G and is congruent to
// f modulo the K-span of G. Requires Supp(f) ⊆ O ∪ ∂O.
template <typename K>
Polynomial<K> border_term_division(const Polynomial<K>& f, std::span<const MarkedPolynomial<K>> basis,
                                   const OrderIdealSet& order_ideal) {
  for (const auto& [t, a] : f) {
    if (!order_ideal.contains(t)) {
      auto b = border(order_ideal);
      if (!std::binary_search(b.begin(), b.end(), t, CanonicalLess{}))
        throw SupportError("support term " + t.to_string() + " outside O ∪ ∂O");
    }
  }
  Polynomial<K> result = f;
  for (const auto& g : basis) {
    if (const K* c = f.coefficient(g.border_term); c != nullptr && !c->is_zero()) {
      // f - c*g = f - c*border_term + c*tail
      result = result - Polynomial<K>::monomial(g.border_term, *c);
      result = result.add_scaled(g.tail, *c);
    }
  }
  return result;
}

}  // namespace borderbases
