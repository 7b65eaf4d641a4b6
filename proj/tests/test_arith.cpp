#include "hecke/linform.hpp"
#include "hecke/numeric.hpp"
#include "hecke/rational.hpp"

#include <doctest.h>

using namespace hecke;

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rational("6/-4")) == "-3/2");
  CHECK(to_string(parse_rational("-0.25")) == "-1/4");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("0.09")) == "9/100");
  CHECK(to_string(parse_rational("010")) == "10");
  CHECK(floor_of(parse_rational("-3/2")) == -2);
  CHECK(frac(parse_rational("-3/2")) == Rational(1) / 2);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("linear forms keep a canonical text form") {
  LinForm f = LinForm::parse("k1/2 - k2 + 3");
  CHECK(f.to_string() == "k1/2 - k2 + 3");
  CHECK(LinForm::parse("-k2+3+k1/2") == f);
  CHECK((f - f).is_zero());
  CHECK(f.primitive().to_string() == "k1 - 2k2 + 6");
  CHECK(f.evaluate(parse_param_vector("k1=2,k2=1")) == 3);
  CHECK_THROWS(f.evaluate(parse_param_vector("k1=2")));
  CHECK(f.slope(parse_param_vector("k1=2,k2=1")) == 0);
}

TEST_CASE("real powers are exact for small denominators") {
  ensure_precision();
  CHECK(power(Real(4), Rational(1) / 2) == 2);
  CHECK(abs(power(Real(2), Rational(-3)) - Real("0.125")) < relative_tolerance());
  CHECK(to_string(Real("0.5"), 10) == "0.5");
}
