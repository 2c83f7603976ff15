#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace covgeo {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
/// Exact rational scalar, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// A point of R^n with exact coordinates.
using Point = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on anything else or q == 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Fixed-point rendering with `digits` fractional digits, rounded half away from zero.
/// Derived from the exact value; never goes through floating point.
std::string to_decimal(const Rational& value, int digits = 15);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
bool is_integer(const Rational& value);

Rational power(const Rational& base, std::size_t exponent);
Integer factorial(std::size_t n);

/// Certified bracket lo <= value^(1/n) <= hi with hi - lo = 10^-digits; value >= 0.
struct RootBracket {
  Rational lo;
  Rational hi;
};
RootBracket nth_root_bracket(const Rational& value, unsigned n, unsigned digits);

std::string to_string(const Point& point);

}  // namespace covgeo
