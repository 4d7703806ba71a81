#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar type, parsing and formatting.
 *
 * Every number in hypq is an arbitrary-precision rational backed by GMP.
 * Text I/O accepts "p/q", integers and decimal literals (with optional
 * exponent); decimals are read as exact rationals, never through a binary
 * floating-point value.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypq {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed text, violated preconditions, out-of-range indices.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis required by an operation does not hold.
class HypothesisError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A bounded search ran out of budget before reaching a verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q", "-17", "3.25", "1e-4", "2.5E+3" exactly.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);

/// Approximate decimal rendering for human-facing output only.
double to_double(const Rational& value);

int sign(const Rational& value);

Rational pow(const Rational& base, unsigned long exponent);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Exact conversion of a finite double to a rational.
Rational from_double(double value);

}  // namespace hypq
