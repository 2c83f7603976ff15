#include "covgeo/errors.hpp"
#include "covgeo/rational.hpp"

#include <doctest.h>

using namespace covgeo;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  for (const char* bad : {"", "1/0", "x", "1/2/3", "1.5", "/2"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(to_decimal(Rational(1, 2)) == "0.500000000000000");
  CHECK(to_decimal(Rational(2, 3)) == "0.666666666666667");
  CHECK(to_decimal(Rational(-2, 3)) == "-0.666666666666667");
  CHECK(to_decimal(Rational(5, 1000), 2) == "0.01");
  CHECK(to_decimal(Rational(11, 4), 0) == "3");
  CHECK(to_decimal(Rational(6)) == "6.000000000000000");
}

TEST_CASE("floor, ceil, powers and factorials") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(is_integer(Rational(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 3)));
  CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(power(Rational(5), 0) == 1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
}

TEST_CASE("root brackets enclose the root") {
  for (auto [value, n] : {std::pair{Rational(2), 2u}, {Rational(11, 2), 2u}, {Rational(59, 6), 3u}, {Rational(16), 4u}}) {
    const auto b = nth_root_bracket(value, n, 40);
    CHECK(b.lo <= b.hi);
    CHECK(power(b.lo, n) <= value);
    CHECK(power(b.hi, n) >= value);
    CHECK(b.hi - b.lo <= Rational(1) / power(Rational(10), 39));
  }
  const auto exact = nth_root_bracket(Rational(9, 4), 2, 20);
  CHECK(exact.lo <= Rational(3, 2));
  CHECK(exact.hi >= Rational(3, 2));
}
