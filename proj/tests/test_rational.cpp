#include "doctest.h"
#include "ordermono/error.hpp"
#include "ordermono/rational.hpp"

using namespace ordermono;

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("0.6") == Rational(3, 5));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK(parse_rational("  1/3 ") == Rational(1, 3));
}

TEST_CASE("decimal parsing does not pass through floating point") {
  // 0.1 has no finite binary expansion.
  CHECK(parse_rational("0.1") * 10 == 1);
  CHECK(parse_rational("0.1") + parse_rational("0.2") == parse_rational("0.3"));
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "--1", "1e", "0x10", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("to_string is canonical p/q") {
  CHECK(to_string(parse_rational("6/8")) == "3/4");
  CHECK(to_string(parse_rational("3")) == "3/1");
  CHECK(to_string(parse_rational("0")) == "0/1");
  CHECK(to_string(parse_rational("-2/4")) == "-1/2");
}

TEST_CASE("to_string round-trips through parse_rational") {
  for (const char* s : {"1/3", "-22/7", "0.125", "1e5", "123456789012345678901234567890/7"}) {
    const Rational r = parse_rational(s);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("to_decimal") {
  CHECK(to_decimal(Rational(1, 4), 3) == "0.25");
  CHECK(to_decimal(Rational(-1, 3), 4) == "-0.3333");
}

TEST_CASE("round_to_denominator rounds to the nearest multiple") {
  const mpz_class den(1000);
  CHECK(round_to_denominator(0.1234, den) == Rational(123, 1000));
  CHECK(round_to_denominator(0.1236, den) == Rational(31, 250));
  CHECK(round_to_denominator(-0.0015, den) == Rational(-1, 500));
  CHECK(round_to_denominator(0.5, mpz_class(2)) == Rational(1, 2));
}
