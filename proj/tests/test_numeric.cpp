#include "doctest.h"
#include "latmut/numeric.hpp"

using namespace latmut;

TEST_CASE("gcd is non-negative") {
    CHECK(gcd(12, -18) == 6);
    CHECK(gcd(-7, 0) == 7);
    CHECK(gcd(0, 0) == 0);
}

TEST_CASE("floor and ceil division round toward the right infinity") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-7, -2) == 3);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK_THROWS_AS(floor_div(1, 0), PreconditionError);
    CHECK(floor_rat(make_rat(-5, 3)) == -2);
    CHECK(ceil_rat(make_rat(-5, 3)) == -1);
    CHECK(floor_rat(Rat(4)) == 4);
}

TEST_CASE("generalized binomial coefficients") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(2, 5) == 0);
    CHECK(binom(-1, 3) == -1);
    CHECK(binom(-3, 2) == 6);
    CHECK(binom(7, 0) == 1);
    CHECK(binom(7, -1) == 0);
    // Pascal on negative tops
    for (long n = -6; n <= 6; ++n)
        for (long k = 1; k <= 6; ++k) CHECK(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
}

TEST_CASE("rationals are normalized") {
    Rat q = make_rat(6, -4);
    CHECK(to_string(q) == "-3/2");
    CHECK(numerator(q) == -3);
    CHECK(denominator(q) == 2);
    CHECK(to_string(make_rat(8, 4)) == "2");
    CHECK(is_integral(make_rat(8, 4)));
    CHECK_FALSE(is_integral(make_rat(1, 3)));
    CHECK_THROWS_AS(make_rat(1, 0), PreconditionError);
}

TEST_CASE("parse_rat") {
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("-10/4") == make_rat(-5, 2));
    CHECK(parse_rat("+3") == Rat(3));
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("to_long range check") {
    CHECK(to_long(Int(-42)) == -42);
    Int big = Int(1) << 80;
    CHECK_THROWS_AS(to_long(big), PreconditionError);
    CHECK(to_string(big) == "1208925819614629174706176");
}
