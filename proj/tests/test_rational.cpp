#include <doctest.h>

#include <stdexcept>

#include "evlogic/rational.hpp"

using evlogic::Rational;

TEST_CASE("decimals and fractions parse exactly") {
  CHECK(Rational::parse("0.7") == Rational(7, 10));
  CHECK(Rational::parse(".25") == Rational(1, 4));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("1") == Rational(1));
  CHECK(Rational::parse("1.000") == Rational(1));
  CHECK(Rational::parse("-2/4") == Rational(-1, 2));
  CHECK(Rational::parse("0.333333333333333333333333").denominator_str() == "1000000000000000000000000");
}

TEST_CASE("malformed numbers are rejected") {
  for (const char* bad : {"", ".", "1/0", "a/2", "1e3", "0.5.5", "1/", "/2", "0x1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("printing") {
  CHECK(Rational(3, 5).str() == "3/5");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(3, 5).decimal() == "0.600000");
  CHECK(Rational(2, 3).decimal() == "0.666667");
  CHECK(Rational(1).decimal() == "1.000000");
  CHECK(Rational(-1, 8).decimal(2) == "-0.13");
  CHECK(Rational(1, 3000000).decimal() == "0.000000");
}

TEST_CASE("arithmetic stays in lowest terms") {
  const Rational a(1, 6);
  const Rational b(1, 3);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a + b).str() == "1/2");
  CHECK((b - a) == a);
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(1, 2));
  CHECK(-a < a);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("works as an Eigen scalar") {
  evlogic::Matrix<Rational> m(2, 2);
  m << Rational(1, 2), Rational(1, 3), Rational(0), Rational(1);
  evlogic::RationalVector v(2);
  v << Rational(2), Rational(3, 4);
  const evlogic::RationalVector r = m * v;
  CHECK(r(0) == Rational(5, 4));
  CHECK(r(1) == Rational(3, 4));
  CHECK(v.sum() == Rational(11, 4));
}

TEST_CASE("to_double rounds to nearest") {
  CHECK(Rational(9, 10).to_double() == 0.9);
  CHECK(Rational(-1, 3).to_double() == -1.0 / 3.0);
  const Rational big = Rational::parse("123456789012345678901234567/1000000000000000000000000000");
  CHECK(big.to_double() == 0.123456789012345678901234567);
  CHECK(Rational(0).to_double() == 0.0);
}
