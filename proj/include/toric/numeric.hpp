#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Exact "p/q" parsing. Accepts an optional sign, an integer numerator and an
// optional positive denominator. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form with q > 0 and gcd(p, q) = 1. Integers are written "p/1".
std::string format_rational(const Rational& q);

// Short human form: "p" when q = 1, "p/q" otherwise.
std::string pretty_rational(const Rational& q);

Integer parse_integer(std::string_view text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

Integer sum(const IntVector& v);
Integer gcd_of(const IntVector& v);
Integer factorial(unsigned n);

std::string to_string(const IntVector& v);

}  // namespace toric
