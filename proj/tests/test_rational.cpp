#include <doctest.h>

#include "nefcone/error.hpp"
#include "nefcone/rational.hpp"
#include "support.hpp"

using namespace nefcone;
using testing::R;

TEST_CASE("make_rational normalizes sign and lowest terms") {
  CHECK(make_rational(-3, -6) == R(1, 2));
  CHECK(make_rational(3, -6) == R(-1, 2));
  CHECK(to_string(make_rational(6, 8)) == "3/4");
  CHECK(to_string(make_rational(-12, 4)) == "-3");
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("parse_rational accepts integers and fractions only") {
  CHECK(parse_rational("6/8") == R(3, 4));
  CHECK(parse_rational("-10/4") == R(-5, 2));
  CHECK(parse_rational("+7") == R(7));
  CHECK(parse_rational("0/5") == R(0));
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "2/-3", "a"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("to_string and parse_rational round trip") {
  testing::Draw draw(3);
  for (int n = 0; n < 200; ++n) {
    const Rational q = draw.rational(1000, 97);
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("make_primitive and common_denominator") {
  CHECK(make_primitive({Integer(4), Integer(-6), Integer(0)}) == std::vector<Integer>{2, -3, 0});
  CHECK(make_primitive({Integer(0), Integer(0)}) == std::vector<Integer>{0, 0});
  CHECK(common_denominator({R(1, 4), R(5, 6), R(2)}) == 12);
  CHECK(common_denominator({}) == 1);
}
