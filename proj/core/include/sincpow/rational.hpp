#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace sincpow {

// Arbitrary-precision scalars. GMP keeps rationals canonical (positive
// denominator, coprime parts) across arithmetic; the factories below keep
// that promise for direct construction and parsing as well.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with a positive denominator.
Rational make_rational(Integer num, Integer den);

Integer factorial(unsigned long n);

Integer pow(const Integer& base, unsigned long exp);

// base^exp with 0^0 = 1; a negative exponent inverts (zero base rejected).
Rational pow(const Rational& base, long exp);

// Exact base^exp for a rational exponent p/q: takes the q-th root of both
// parts, then raises to p. Empty when the value is irrational.
std::optional<Rational> exact_pow(const Rational& base, const Rational& exp);

bool is_integer(const Rational& q);

std::string to_string(const Integer& n);

// "p/q" in lowest terms with q > 0, or just "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "P" or "P/Q" with an optional leading minus; no decimals.
std::optional<Rational> parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace sincpow
