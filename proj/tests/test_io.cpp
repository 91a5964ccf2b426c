#include <catch2/catch.hpp>

#include "support.hpp"

using namespace borderbases;
using bbtest::fp_points;
using bbtest::q_points;
using bbtest::qpoly;

TEST_CASE("field specs round-trip through json") {
  REQUIRE(field_from_json(field_to_json(FieldSpec::rationals())) == FieldSpec::rationals());
  REQUIRE(field_from_json(field_to_json(FieldSpec::prime_field(32003))) ==
          FieldSpec::prime_field(32003));
  REQUIRE_THROWS_AS(field_from_json(json("R")), InputError);
  REQUIRE_THROWS_AS(field_from_json(json{{"p", 6}}), InputError);
}

TEST_CASE("border pairs round-trip through json bit-exactly") {
  auto x = q_points({{0, 0}, {0, -1}, {1, 0}, {1, 1}, {-1, 1}});
  auto result = fg_all_quasi_order_ideals(x);
  for (const auto& pair : result.pairs) {
    json j = pair_to_json(pair);
    auto back = pair_from_json<Rational>(j, x.spec(), x.arity(), Rational(1));
    REQUIRE(back == pair);
    REQUIRE(pair_to_json(back) == j);
  }

  auto y = fp_points(11, {{0, 0}, {1, 2}, {3, 7}});
  for (const auto& pair : bm_all_quasi_order_ideals(y).pairs) {
    json j = pair_to_json(pair);
    auto back = pair_from_json<Fp>(j, y.spec(), y.arity(), y.one());
    REQUIRE(back == pair);
    REQUIRE(pair_to_json(back) == j);
  }
}

TEST_CASE("json point files parse") {
  auto parsed = parse_point_file(R"({"field": "Q", "n": 2, "points": [["2","3"],["1","4"],["5","0"]]})");
  REQUIRE(parsed.spec.is_rationals());
  REQUIRE(parsed.arity == 2);
  auto x = realize_points<Rational>(parsed);
  REQUIRE(x.size() == 3);
  REQUIRE(x.point(0)[1] == Rational(3));

  auto modp = parse_point_file(R"({"field": {"p": 11}, "n": 2, "points": [[0,0],[1,2]]})");
  REQUIRE(modp.spec == FieldSpec::prime_field(11));
  auto yx = realize_points<Fp>(modp);
  REQUIRE(yx.point(1)[1] == Fp(2, 11));
}

TEST_CASE("text point files parse") {
  auto parsed = parse_point_file("# three points\n2 3\n1 4\n5 0\n");
  REQUIRE(parsed.spec.is_rationals());
  REQUIRE(parsed.arity == 2);
  REQUIRE(parsed.coordinates.size() == 3);

  auto modp = parse_point_file("field 11\n0 0\n1 2\n");
  REQUIRE(modp.spec == FieldSpec::prime_field(11));

  auto rational = parse_point_file("1/2 -3\n0 1\n");
  auto x = realize_points<Rational>(rational);
  REQUIRE(x.point(0)[0] == Rational(1, 2));
}

TEST_CASE("point file diagnostics") {
  REQUIRE_THROWS_AS(parse_point_file(""), InputError);
  REQUIRE_THROWS_AS(parse_point_file("1 2\n3\n"), InputError);
  try {
    parse_point_file("1 2\n3 4 5\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
  }
  REQUIRE_THROWS_AS(parse_point_file(R"({"field": "Q", "n": 2)"), InputError);
  REQUIRE_THROWS_AS(parse_point_file(R"({"field": "Q", "n": 2, "points": [["1"]]})"), InputError);
  // duplicate points surface when realized
  auto parsed = parse_point_file(R"({"field": "Q", "n": 2, "points": [["1","2"],["1","2"]]})");
  REQUIRE_THROWS_AS(realize_points<Rational>(parsed), InputError);
}

TEST_CASE("polynomial parser handles the documented forms") {
  REQUIRE(qpoly("x1^2*x2 - 1/2*x2^2 - 1/2*x2", 2).to_string() ==
          "x1^2*x2 - 1/2*x2^2 - 1/2*x2");
  REQUIRE(qpoly("-x1 + 1", 2) == Polynomial<Rational>::monomial(Term::one(2), Rational(1)) -
                                     Polynomial<Rational>::monomial(bbtest::term("x1", 2), Rational(1)));
  REQUIRE(qpoly("0", 3).is_zero());
  REQUIRE(qpoly("3", 1) == Polynomial<Rational>::monomial(Term::one(1), Rational(3)));
  REQUIRE(bbtest::fppoly("x1 + 10", 2, 11) == bbtest::fppoly("x1 - 1", 2, 11));
  REQUIRE_THROWS_AS(qpoly("", 2), InputError);
  REQUIRE_THROWS_AS(qpoly("x1 +", 2), InputError);
  REQUIRE_THROWS_AS(qpoly("q", 2), InputError);
}

TEST_CASE("enumeration serialization is stable") {
  auto x = q_points({{2, 3}, {1, 4}, {5, 0}});
  auto result = bm_all_order_ideals(x);
  json j = enumeration_to_json(result, x.spec(), x.arity(), x.size(), "all-order-ideals", "bm", false);
  REQUIRE(j["pair_count"] == 2);
  REQUIRE(j["pairs"].size() == 2);
  REQUIRE(j["s"] == 3);
  // serialize twice, identical text
  REQUIRE(j.dump() == enumeration_to_json(bm_all_order_ideals(x), x.spec(), x.arity(), x.size(),
                                          "all-order-ideals", "bm", false)
                          .dump());
}
