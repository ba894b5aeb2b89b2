#include "tribook/rational.hpp"

#include <stdexcept>

#include "doctest.h"

using tribook::Rational;

TEST_CASE("rational normalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(5, 1).str() == "5");
  CHECK(Rational(-7, 3).str() == "-7/3");
}

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 4) * Rational(2, 9) == Rational(1, 6));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(2, 5));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 7) == Rational(1));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational bounds evaluate exactly") {
  // m - 4m^2/n^2 + 6t/n for (n, m, t) = (5, 5, 0): 5 - 100/25 + 0 = 1.
  const Rational bound = Rational(5) - Rational(4 * 25, 25) + Rational(0, 5);
  CHECK(bound == Rational(1));
}
