#include "doctest.h"
#include "valab/error.hpp"
#include "valab/rational.hpp"

using namespace valab;

namespace {
Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("+3") == 3);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("6/4").get_den() == 2);
  CHECK(parse_rational(" -1/2 ") == Rational(-1, 2));
  CHECK(parse_rational("123456789012345678901234567890/3") ==
        Rational("41152263004115226300411522630"));
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/", "/2", "1//2", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
    try {
      parse_rational(bad);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }
}

TEST_CASE("to_string is canonical and round-trips") {
  CHECK(to_string(frac(4, 6)) == "2/3");
  CHECK(to_string(frac(-4, 2)) == "-2");
  for (int p = -7; p <= 7; ++p)
    for (int q = 1; q <= 5; ++q) CHECK(parse_rational(to_string(frac(p, q))) == frac(p, q));
  CHECK(to_string(Vector{Rational(1), Rational(-1, 2)}) == "(1, -1/2)");
}

TEST_CASE("rational_sqrt is exact") {
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
  CHECK_FALSE(rational_sqrt(Rational(1, 2)).has_value());
  CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
}

TEST_CASE("vector arithmetic") {
  Vector x{1, 2}, y{Rational(1, 2), -1};
  CHECK(x + y == Vector{Rational(3, 2), 1});
  CHECK(x - y == Vector{Rational(1, 2), 3});
  CHECK(Rational(2) * y == Vector{1, -2});
  CHECK(dot(x, y) == Rational(-3, 2));
  CHECK(concat(x, y).size() == 4);
  CHECK(is_zero(zeros(3)));
  CHECK(unit_vector(3, 1) == Vector{0, 1, 0});
}
