#include <doctest.h>

#include <sstream>

#include "obranch/rational.hpp"

using obranch::Rational;

TEST_CASE("parse and print") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("4/-8"), std::invalid_argument);
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-5).str() == "-5");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  const Rational a(3, 4), b(-5, 6);
  CHECK(a + b == Rational(-1, 12));
  CHECK(a - b == Rational(19, 12));
  CHECK(a * b == Rational(-5, 8));
  CHECK(a / b == Rational(-9, 10));
  CHECK(b.inverse() == Rational(-6, 5));
  CHECK_THROWS(Rational(0) .inverse());
  CHECK_THROWS(a / Rational(0));
  CHECK(pow(a, 3) == Rational(27, 64));
  CHECK(pow(a, -2) == Rational(16, 9));
  CHECK(pow(Rational(0), 0) == Rational(1));
}

TEST_CASE("predicates and conversions") {
  CHECK(Rational(5, 2).is_half_odd());
  CHECK_FALSE(Rational(5, 4).is_half_odd());
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(-7, 2).floor_long() == -4);
  CHECK(Rational(7, 2).floor_long() == 3);
  CHECK(Rational(12, 3).to_long() == 4);
  CHECK_THROWS(Rational(1, 3).to_long());
  CHECK(Rational(-3, 2).abs() == Rational(3, 2));
  CHECK(Rational(-3, 2).sign() == -1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
  std::ostringstream os;
  os << Rational(-2, 6);
  CHECK(os.str() == "-1/3");
}

TEST_CASE("Eigen scalar") {
  obranch::MatQ m(2, 2);
  m << Rational(1), Rational(2), Rational(3), Rational(4);
  const obranch::MatQ p = m * m;
  CHECK(p(0, 0) == Rational(7));
  CHECK(p(1, 1) == Rational(22));
  CHECK(m.sum() == Rational(10));
}
