#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maxwalk/format.hpp"
#include "maxwalk/hp.hpp"

using namespace maxwalk;

TEST_CASE("rational rendering") {
    CHECK(rat_str(Rational(9, 16)) == "9/16");
    CHECK(rat_str(Rational(1)) == "1");
    CHECK(rat_str(Rational(-3, 4)) == "-3/4");
    CHECK(rat_str(Rational(0)) == "0");
}

TEST_CASE("decimal rendering with significant digits") {
    CHECK(decimal_str(Rational(1, 16), 12) == "0.0625000000000");
    CHECK(decimal_str(Rational(1, 4), 12) == "0.250000000000");
    CHECK(decimal_str(Rational(1), 12) == "1.00000000000");
    CHECK(decimal_str(Rational(12345), 3) == "12300");
    CHECK(decimal_str(Rational(2, 3), 6) == "0.666667");
    CHECK(decimal_str(Rational(-1, 8), 4) == "-0.1250");
    CHECK(decimal_str(Rational(999999, 1000), 3) == "1000");
    CHECK(decimal_str(Rational(0), 12) == "0");
}

TEST_CASE("real rendering is plain and deterministic") {
    hp::Real pi = hp::pi<hp::Real>();
    CHECK(real_str(pi, 12) == "3.14159265359");
    CHECK(real_str(pi, 12) == real_str(hp::pi<hp::Real>(), 12));
    CHECK(real_str(hp::Real(0.0625), 3) == "0.0625");
    CHECK(real_str(hp::Real(-2), 4) == "-2.000");
}
