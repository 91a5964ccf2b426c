#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "borderbases/errors.hpp"

namespace borderbases {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is a proven deterministic witness set below 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < r; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Runtime descriptor of the coefficient field: the rationals or F_p.
class FieldSpec {
public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }

  static FieldSpec prime_field(std::uint64_t p) {
    if (p >= (1ull << 63))
      throw InputError("prime field modulus must be < 2^63, got " + std::to_string(p));
    if (!is_prime_u64(p))
      throw InputError("prime field modulus must be prime, got " + std::to_string(p));
    return FieldSpec(Kind::PrimeField, p);
  }

  Kind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  std::uint64_t modulus() const { return modulus_; }

  bool operator==(const FieldSpec& other) const = default;

  std::string to_string() const {
    return is_rationals() ? "Q" : "F" + std::to_string(modulus_);
  }

private:
  FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint64_t modulus_;
};

// Exact rational scalar. Always stored in canonical form: gcd-reduced with
// positive denominator, so equality and hashing are structural.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view text) {
    try {
      mpq_class v(std::string(text), 10);
      if (v.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
      v.canonicalize();
      return Rational(RawTag{}, std::move(v));
    } catch (const std::invalid_argument&) {
      throw InputError("cannot parse rational '" + std::string(text) + "'");
    }
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }

  Rational operator+(const Rational& o) const { return Rational(RawTag{}, mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(RawTag{}, mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(RawTag{}, mpq_class(v_ * o.v_)); }
  Rational operator-() const { return Rational(RawTag{}, mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(RawTag{}, mpq_class(1 / v_));
  }

  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return Rational(RawTag{}, mpq_class(v_ / o.v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  std::string to_string() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

private:
  struct RawTag {};
  Rational(RawTag, mpq_class v) : v_(std::move(v)) {}  // already canonical

  mpq_class v_;
};

// Element of F_p as the least nonnegative residue. Each element carries its
// modulus; arithmetic across different moduli throws FieldMismatch.
class Fp {
public:
  Fp() : value_(0), p_(0) {}
  Fp(std::uint64_t value, std::uint64_t p) : value_(value % p), p_(p) {}

  static Fp from_signed(std::int64_t value, std::uint64_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  // Accepts a decimal integer, possibly negative or >= p; reduced mod p.
  static Fp parse(std::string_view text, std::uint64_t p) {
    try {
      mpz_class v(std::string(text), 10);
      mpz_class m(static_cast<unsigned long>(p));
      mpz_class r = v % m;
      if (r < 0) r += m;
      return Fp(r.get_ui(), p);
    } catch (const std::invalid_argument&) {
      throw InputError("cannot parse residue '" + std::string(text) + "'");
    }
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1 % p_; }

  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

  Fp operator+(const Fp& o) const {
    check(o);
    std::uint64_t s = value_ + o.value_;  // p < 2^63, no overflow
    if (s >= p_) s -= p_;
    return Fp(Checked{}, s, p_);
  }

  Fp operator-(const Fp& o) const {
    check(o);
    std::uint64_t s = value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_;
    return Fp(Checked{}, s, p_);
  }

  Fp operator*(const Fp& o) const {
    check(o);
    return Fp(Checked{}, detail::mulmod_u64(value_, o.value_, p_), p_);
  }

  Fp operator-() const { return Fp(Checked{}, value_ == 0 ? 0 : p_ - value_, p_); }

  Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
  Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
  Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

  Fp inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in F" + std::to_string(p_));
    return Fp(Checked{}, detail::powmod_u64(value_, p_ - 2, p_), p_);
  }

  Fp operator/(const Fp& o) const { return *this * o.inverse(); }

  bool operator==(const Fp& o) const { return value_ == o.value_ && p_ == o.p_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }
  bool operator<(const Fp& o) const { return value_ < o.value_; }

  std::string to_string() const { return std::to_string(value_); }

private:
  struct Checked {};
  Fp(Checked, std::uint64_t value, std::uint64_t p) : value_(value), p_(p) {}

  void check(const Fp& o) const {
    if (p_ != o.p_)
      throw FieldMismatch("mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }

  std::uint64_t value_;
  std::uint64_t p_;
};

// Parse a scalar in the textual form matching `spec`.
template <typename K>
K parse_element(const FieldSpec& spec, std::string_view text);

template <>
inline Rational parse_element<Rational>(const FieldSpec& spec, std::string_view text) {
  if (!spec.is_rationals()) throw InputError("field spec does not describe Q");
  return Rational::parse(text);
}

template <>
inline Fp parse_element<Fp>(const FieldSpec& spec, std::string_view text) {
  if (spec.is_rationals()) throw InputError("field spec does not describe a prime field");
  return Fp::parse(text, spec.modulus());
}

}  // namespace borderbases
