#include <catch2/catch.hpp>

#include "support.hpp"

using namespace borderbases;

TEST_CASE("rational arithmetic is exact and canonical") {
  REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  REQUIRE(Rational(1, 2).to_string() == "1/2");
  REQUIRE(Rational(4, 6) == Rational(2, 3));
  REQUIRE(Rational(3, -6).to_string() == "-1/2");  // denominator kept positive
  REQUIRE(Rational(7).to_string() == "7");

  Rational a(-13, 40);
  REQUIRE(a + Rational(0) == a);
  REQUIRE(a * a.inverse() == Rational(1));
  REQUIRE(Rational(-2, 5).inverse() == Rational(-5, 2));
}

TEST_CASE("rational parsing round-trips") {
  for (const char* text : {"0", "1", "-1", "5/6", "-13/40", "100000000000000000001/3"}) {
    REQUIRE(Rational::parse(text).to_string() == text);
  }
  REQUIRE(Rational::parse("4/6") == Rational(2, 3));
  REQUIRE_THROWS_AS(Rational::parse("x"), InputError);
  REQUIRE_THROWS_AS(Rational::parse("1/0"), InputError);
}

TEST_CASE("prime field arithmetic") {
  Fp seven(7, 11), eight(8, 11);
  REQUIRE(seven * eight == Fp(1, 11));
  REQUIRE(Fp(3, 11).inverse() == Fp(4, 11));
  REQUIRE(Fp(1, 2).inverse() == Fp(1, 2));
  REQUIRE(Fp::from_signed(-1, 11) == Fp(10, 11));
  REQUIRE((Fp(2, 11) - Fp(5, 11)) == Fp(8, 11));
  REQUIRE(Fp::parse("-4", 11) == Fp(7, 11));
  REQUIRE(Fp(9, 11).to_string() == "9");
}

TEST_CASE("field errors") {
  REQUIRE_THROWS_AS(Fp(1, 7) + Fp(1, 11), FieldMismatch);
  REQUIRE_THROWS_AS(Fp(0, 11).inverse(), DivisionByZero);
  REQUIRE_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  REQUIRE_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("field spec validates the modulus") {
  REQUIRE(FieldSpec::prime_field(2).modulus() == 2);
  REQUIRE(FieldSpec::prime_field(32003).modulus() == 32003);
  REQUIRE_THROWS_AS(FieldSpec::prime_field(1), InputError);
  REQUIRE_THROWS_AS(FieldSpec::prime_field(4), InputError);
  REQUIRE_THROWS_AS(FieldSpec::prime_field(32001), InputError);  // 3 * 10667
  REQUIRE_THROWS_AS(FieldSpec::prime_field(1ull << 63), InputError);
  REQUIRE(FieldSpec::rationals().is_rationals());
}

TEST_CASE("deterministic primality test") {
  REQUIRE(is_prime_u64(2));
  REQUIRE(is_prime_u64(32003));
  REQUIRE(is_prime_u64(4294967291ull));
  REQUIRE(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  REQUIRE_FALSE(is_prime_u64(1));
  REQUIRE_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  REQUIRE_FALSE(is_prime_u64(32003ull * 32003ull));
}

TEST_CASE("field axioms hold on random triples") {
  SplitMix64 rng(20240601);
  auto rand_q = [&rng]() {
    long num = static_cast<long>(rng.next() % 41) - 20;
    long den = 1 + static_cast<long>(rng.next() % 23);
    return Rational(num, den);
  };
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_q(), b = rand_q(), c = rand_q();
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a + (-a) == Rational(0));
    if (!a.is_zero()) REQUIRE(a * a.inverse() == Rational(1));
  }
  for (std::uint64_t p : {2ull, 11ull, 32003ull}) {
    for (int i = 0; i < 200; ++i) {
      Fp a(rng.next() % p, p), b(rng.next() % p, p), c(rng.next() % p, p);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + (-a) == Fp(0, p));
      if (!a.is_zero()) REQUIRE(a * a.inverse() == Fp(1, p));
    }
  }
}
