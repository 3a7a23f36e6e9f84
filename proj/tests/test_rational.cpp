#include "specstats/rational.hpp"

#include <doctest.h>

using namespace specstats;

TEST_CASE("rationals are canonical: reduced, positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(denominator(Rational(2, 4)) == 2);
    CHECK(parse_scalar("1/-2")->value == Rational(-1, 2));
    CHECK(denominator(parse_scalar("3/-6")->value) == 2);
    CHECK(denominator(Rational(1, 3) - Rational(1, 2)) == 6);
    CHECK(to_fraction_string(Rational(-4, 6)) == "-2/3");
    CHECK(to_fraction_string(Rational(7)) == "7");
}

TEST_CASE("parse_scalar accepts integers, fractions, decimals, scientific") {
    auto p = parse_scalar("42");
    REQUIRE(p);
    CHECK(p->value == 42);
    CHECK(p->exact_form);

    p = parse_scalar("-3/4");
    REQUIRE(p);
    CHECK(p->value == Rational(-3, 4));
    CHECK(p->exact_form);

    p = parse_scalar("1.25");
    REQUIRE(p);
    CHECK(p->value == Rational(5, 4));
    CHECK_FALSE(p->exact_form);

    p = parse_scalar("-3.5e-2");
    REQUIRE(p);
    CHECK(p->value == Rational(-7, 200));
    CHECK_FALSE(p->exact_form);

    p = parse_scalar("9.75e-1");
    REQUIRE(p);
    CHECK(p->value == Rational(39, 40));

    CHECK_FALSE(parse_scalar(""));
    CHECK_FALSE(parse_scalar("x"));
    CHECK_FALSE(parse_scalar("1/0"));
    CHECK_FALSE(parse_scalar("1..2"));
    CHECK_FALSE(parse_scalar("--2"));
}

TEST_CASE("factorials and powers") {
    CHECK(int_factorial(0) == 1);
    CHECK(int_factorial(8) == 40320);
    CHECK(int_pow(Int(3), 4) == 81);
    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(to_double(Rational(1, 4)) == 0.25);
}
