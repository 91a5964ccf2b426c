#pragma once

#include <stdexcept>
#include <string>

namespace borderbases {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic between elements of different fields (e.g. F_7 and F_11).
class FieldMismatch : public Error {
public:
  explicit FieldMismatch(const std::string& what) : Error(what) {}
};

class DivisionByZero : public Error {
public:
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Mixing terms, points or polynomials with different numbers of variables.
class ArityError : public Error {
public:
  explicit ArityError(const std::string& what) : Error(what) {}
};

// index_of over a set admitting no divisor factorization.
class IndexUndefined : public Error {
public:
  explicit IndexUndefined(const std::string& what) : Error(what) {}
};

class ZeroPolynomial : public Error {
public:
  explicit ZeroPolynomial(const std::string& what) : Error(what) {}
};

// Operation restricted to order ideals called with something else.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Polynomial support escapes the allowed region O ∪ ∂O.
class SupportError : public Error {
public:
  explicit SupportError(const std::string& what) : Error(what) {}
};

class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Appending an all-zero residual row to a reduction state.
class ZeroRowError : public Error {
public:
  explicit ZeroRowError(const std::string& what) : Error(what) {}
};

// Brute-force oracle invoked beyond its configured size bounds.
class OracleTooLarge : public Error {
public:
  explicit OracleTooLarge(const std::string& what) : Error(what) {}
};

// Malformed user input (files, CLI arguments, generator specs).
class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace borderbases
