#include <algorithm>
#include <catch2/catch.hpp>

#include "support.hpp"

using namespace borderbases;
using bbtest::term;
using bbtest::term_set;

TEST_CASE("divisibility") {
  REQUIRE(term("x1", 2).divides(term("x1*x2", 2)));
  REQUIRE_FALSE(term("x1^2", 2).divides(term("x1*x2", 2)));
  REQUIRE(term("1", 2).divides(term("x1^3*x2", 2)));
  REQUIRE_THROWS_AS(term("x1", 2).divides(term("x1", 3)), ArityError);
}

TEST_CASE("term orderings") {
  auto drl = TermOrdering::degrevlex(2);
  REQUIRE(drl.greater(term("x1", 2), term("x2", 2)));
  REQUIRE(TermOrdering::deglex(2).greater(term("x2^2", 2), term("x1", 2)));
  REQUIRE(TermOrdering::lex(2).greater(term("x1", 2), term("x2^3", 2)));

  // degrevlex in three variables: x1*x3 < x2^2
  auto drl3 = TermOrdering::degrevlex(3);
  REQUIRE(drl3.less(term("x1*x3", 3), term("x2^2", 3)));

  // permutation swaps precedence
  TermOrdering swapped(TermOrdering::Kind::Lex, std::vector<std::size_t>{1, 0});
  REQUIRE(swapped.greater(term("x2", 2), term("x1^3", 2)));

  REQUIRE_THROWS_AS(TermOrdering(TermOrdering::Kind::Lex, std::vector<std::size_t>{0, 0}), InputError);
}

TEST_CASE("ordering properties on random triples") {
  SplitMix64 rng(7);
  std::vector<TermOrdering> ords;
  ords.push_back(TermOrdering::degrevlex(3));
  ords.push_back(TermOrdering::deglex(3));
  ords.push_back(TermOrdering::lex(3));
  ords.push_back(TermOrdering(TermOrdering::Kind::DegRevLex, std::vector<std::size_t>{2, 0, 1}));
  Term unit = Term::one(3);
  for (const auto& ord : ords) {
    for (int i = 0; i < 300; ++i) {
      Term a = bbtest::random_term(rng, 3, 4), b = bbtest::random_term(rng, 3, 4),
           s = bbtest::random_term(rng, 3, 3);
      // totality
      REQUIRE(((ord.compare(a, b) == 0) == (a == b)));
      REQUIRE(ord.compare(a, b) == -ord.compare(b, a));
      // multiplicative
      if (ord.less(a, b)) REQUIRE(ord.less(a * s, b * s));
      // well-ordering: 1 is minimal
      if (a != unit) REQUIRE(ord.less(unit, a));
    }
  }
}

TEST_CASE("order ideal predicate") {
  REQUIRE(is_order_ideal(term_set({"1", "x1", "x2", "x1*x2", "x1^2", "x2^2"}, 2)));
  REQUIRE_FALSE(is_order_ideal(term_set({"1", "x1", "x1^2*x2"}, 2)));
  REQUIRE(is_order_ideal(OrderIdealSet(2)));
  REQUIRE_FALSE(is_order_ideal(term_set({"x1"}, 2)));
}

TEST_CASE("quasi order ideal predicate") {
  REQUIRE(is_quasi_order_ideal(term_set({"1", "x1", "x1*x2", "x1^2*x2"}, 2)));
  // order ideals containing 1 are quasi order ideals
  REQUIRE(is_quasi_order_ideal(term_set({"1", "x1", "x2", "x1^2"}, 2)));
  REQUIRE_FALSE(is_quasi_order_ideal(term_set({"1", "x1^2"}, 2)));
  REQUIRE_FALSE(is_quasi_order_ideal(term_set({"x1"}, 2)));
  REQUIRE_FALSE(is_quasi_order_ideal(OrderIdealSet(2)));
}

TEST_CASE("border") {
  auto b = border(term_set({"1", "x1", "x2", "x1*x2", "x1^2", "x2^2"}, 2));
  REQUIRE(b == std::vector<Term>{term("x2^3", 2), term("x1*x2^2", 2), term("x1^2*x2", 2),
                                 term("x1^3", 2)});
  REQUIRE(border(OrderIdealSet(2)) == std::vector<Term>{term("1", 2)});
  REQUIRE(border(term_set({"1"}, 3)) ==
          std::vector<Term>{term("x3", 3), term("x2", 3), term("x1", 3)});
}

TEST_CASE("index of a term") {
  auto s = term_set({"1", "x1", "x2"}, 2);
  REQUIRE(index_of(s, term("x2", 2)) == 0);
  REQUIRE(index_of(s, term("x1*x2", 2)) == 1);
  REQUIRE(index_of(s, term("x1^2*x2", 2)) == 2);
  REQUIRE_THROWS_AS(index_of(OrderIdealSet(2), term("x1", 2)), IndexUndefined);
  REQUIRE_THROWS_AS(index_of(term_set({"1", "x1^2"}, 2), term("x1", 2)), DomainError);
}

TEST_CASE("index agrees with brute force over divisor factorizations") {
  SplitMix64 rng(99);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 2 + rng.next() % 2;
    auto s = bbtest::random_order_ideal(rng, n, 1 + rng.next() % 6);
    Term t = bbtest::random_term(rng, n, 3);
    bool divisible = false;
    std::uint32_t best = 0;
    bool first = true;
    for (const auto& m : s) {
      if (!m.divides(t)) continue;
      divisible = true;
      std::uint32_t k = t.divided_by(m).degree();
      if (first || k < best) best = k;
      first = false;
    }
    if (!divisible) continue;
    REQUIRE(index_of(s, t) == best);
  }
}

TEST_CASE("border form") {
  auto s = term_set({"1", "x1", "x2"}, 2);
  REQUIRE(border_form(s, bbtest::qpoly("x1*x2 + x1", 2)) == bbtest::qpoly("x1*x2", 2));
  REQUIRE(border_form(s, bbtest::qpoly("-3*x2", 2)) == bbtest::qpoly("-3*x2", 2));
  REQUIRE(border_form(s, bbtest::qpoly("x1*x2 + x1^2*x2", 2)) == bbtest::qpoly("x1^2*x2", 2));
  REQUIRE_THROWS_AS(border_form(s, Polynomial<Rational>(2)), ZeroPolynomial);
}

TEST_CASE("expansion candidates") {
  auto s = term_set({"1", "x1", "x2", "x1^2"}, 2);
  auto cands = expand_candidates(s);
  // x1^2*x2 is in the border but {1,x1,x2,x1^2,x1^2*x2} is not an order ideal
  REQUIRE(cands == std::vector<Term>{term("x2^2", 2), term("x1*x2", 2), term("x1^3", 2)});
  REQUIRE(expand_candidates(OrderIdealSet(2)) == std::vector<Term>{term("1", 2)});
  REQUIRE(expand_candidates(term_set({"1"}, 2)) ==
          std::vector<Term>{term("x2", 2), term("x1", 2)});
}

TEST_CASE("border and expansion properties on random sets") {
  SplitMix64 rng(1234);
  for (int i = 0; i < 80; ++i) {
    std::size_t n = 1 + rng.next() % 3;
    auto s = bbtest::random_order_ideal(rng, n, rng.next() % 8);
    auto b = border(s);
    for (const auto& t : b) REQUIRE_FALSE(s.contains(t));
    auto cands = expand_candidates(s);
    for (const auto& t : cands) {
      REQUIRE(std::binary_search(b.begin(), b.end(), t, CanonicalLess{}));
      REQUIRE(is_order_ideal(s.with(t)));
    }
    if (!b.empty()) {
      // minimal-degree border elements always extend the order ideal
      std::uint32_t min_deg = b.front().degree();
      for (const auto& t : b)
        if (t.degree() == min_deg) REQUIRE(is_order_ideal(s.with(t)));
    }
  }
}

TEST_CASE("quasi order ideals absorb any border element") {
  SplitMix64 rng(4321);
  for (int i = 0; i < 80; ++i) {
    std::size_t n = 1 + rng.next() % 3;
    auto s = bbtest::random_quasi_order_ideal(rng, n, 1 + rng.next() % 7);
    REQUIRE(is_quasi_order_ideal(s));
    for (const auto& t : border(s)) REQUIRE(is_quasi_order_ideal(s.with(t)));
  }
}

TEST_CASE("term text forms") {
  REQUIRE(term("x1^2*x2", 3).to_string() == "x1^2*x2");
  REQUIRE(Term::one(4).to_string() == "1");
  REQUIRE(term("x2*x1", 2) == term("x1*x2", 2));
  REQUIRE_THROWS_AS(Term::parse("x5", 2), InputError);
  REQUIRE_THROWS_AS(Term::parse("y", 2), InputError);
}
