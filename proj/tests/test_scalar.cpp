#include <doctest.h>

#include "anvm/scalar.hpp"

using namespace anvm;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Scalar a(4, -6);
    CHECK(a.to_string() == "-2/3");
    CHECK(Scalar(0, 5).to_string() == "0");
    CHECK(Scalar(7, 1).to_string() == "7");
    CHECK(Scalar::parse_rational("10/15") == Scalar(2, 3));
    CHECK(Scalar::parse_rational("-3") == Scalar(-3));
    CHECK_THROWS_AS(Scalar::parse_rational("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    Scalar a(1, 3), b(1, 6);
    CHECK(a + b == Scalar(1, 2));
    CHECK(a - b == Scalar(1, 6));
    CHECK(a * b == Scalar(1, 18));
    CHECK(a / b == Scalar(2));
    CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
}

TEST_CASE("float precision is the minimum of the operands") {
    BigFloat x(1L, 256), y(1L, 128);
    CHECK((x + y).precision() == 128);
    CHECK((x * x).precision() == 256);
    Scalar s(Scalar(1, 3).to_float(192));
    Scalar t(2);
    CHECK((s * t).flt().precision() == 192);  // rational side does not downgrade
}

TEST_CASE("mixed comparison and conversion") {
    Scalar r(1, 4);
    Scalar f(r.to_float(128));
    CHECK(r == f);
    CHECK((r - f).is_zero());
    CHECK(Scalar(1, 3).to_float(64).precision() == 64);
}

TEST_CASE("sinh and exp run at the requested precision") {
    Scalar s = sinh(Scalar(1), 256);
    CHECK(s.flt().precision() == 256);
    // sinh(1) = (e - 1/e)/2
    Scalar e = exp(Scalar(1), 256);
    Scalar alt = (e - Scalar(1) / e) / Scalar(2);
    CHECK((s - alt).abs().to_float(256) < BigFloat::pow2(-250, 256));
}
