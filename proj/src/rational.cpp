#include "covgeo/rational.hpp"

#include "covgeo/errors.hpp"

#include <cctype>

namespace covgeo {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = value < 0;
  const Integer num = abs(numerator(value));
  const Integer den = denominator(value);
  // round(|v| * 10^digits) with ties away from zero
  Integer scaled = (2 * num * scale + den) / (2 * den);
  const Integer whole = scaled / scale;
  std::string frac = (scaled % scale).str();
  if (digits > 0) frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.str();
  if (digits > 0) out += "." + frac;
  return out;
}

Integer floor(const Rational& value) {
  const Integer& n = numerator(value);
  const Integer& d = denominator(value);
  Integer q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil(const Rational& value) { return -floor(-value); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Rational power(const Rational& base, std::size_t exponent) {
  Rational result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

Integer factorial(std::size_t n) {
  Integer result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= static_cast<unsigned long>(i);
  return result;
}

RootBracket nth_root_bracket(const Rational& value, unsigned n, unsigned digits) {
  if (value < 0) throw Error(ErrorCode::DomainViolation, "root of a negative value");
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Integer scale_n = 1;
  for (unsigned i = 0; i < n; ++i) scale_n *= scale;
  const Integer target = floor(value * Rational(scale_n));
  Integer root;
  mpz_root(root.backend().data(), target.backend().data(), n);
  // root^n <= target <= value*scale^n < target + 1 <= (root+1)^n
  return {Rational(root, scale), Rational(root + 1, scale)};
}

std::string to_string(const Point& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += to_string(point[i]);
  }
  return out + ")";
}

}  // namespace covgeo
