#include <doctest.h>

#include "pcdyn/scalar.hpp"

using namespace pcdyn;

TEST_CASE("rational parsing is exact") {
    Scalar a = Scalar::parse("0.3", Backend::Rational);
    CHECK(a == Scalar::rational(3, 10));
    CHECK(Scalar::parse("149/243", Backend::Rational).str() == "149/243");
    CHECK(Scalar::parse("-0.25", Backend::Rational) == Scalar::rational(-1, 4));
    CHECK(Scalar::parse("1e-8", Backend::Rational) == Scalar::rational(1, 100000000));
    CHECK(Scalar::parse("2.5e2", Backend::Rational) == Scalar::rational(250));
    CHECK(Scalar::parse(" 7/16 ", Backend::Rational).str() == "7/16");
}

TEST_CASE("rational arithmetic is closed and exact") {
    Scalar x = Scalar::rational(1, 3);
    Scalar y = Scalar::rational(1, 6);
    CHECK((x + y) == Scalar::rational(1, 2));
    CHECK((x - y) == y);
    CHECK((x * y) == Scalar::rational(1, 18));
    CHECK((x / y) == Scalar::rational(2));
    CHECK((-x).str() == "-1/3");
    CHECK(x.abs() == x);
}

TEST_CASE("float backend comparisons snap within eps") {
    Scalar a = Scalar::floating(0.5);
    Scalar b = Scalar::floating(0.5 + 5e-13);
    CHECK(a == b);
    CHECK(a.cmp(Scalar::floating(0.5 + 1e-11)) < 0);
    CHECK(Scalar::floating(1.0) > Scalar::floating(0.9999999999));
}

TEST_CASE("parse rejects malformed literals") {
    CHECK_THROWS_AS(Scalar::parse("", Backend::Rational), Error);
    CHECK_THROWS_AS(Scalar::parse("abc", Backend::Rational), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0", Backend::Rational), Error);
    CHECK_THROWS_AS(Scalar::parse("1..2", Backend::Float), Error);
}

TEST_CASE("mixing backends is refused") {
    Scalar r = Scalar::rational(1, 2);
    Scalar f = Scalar::floating(0.5);
    CHECK_THROWS(r + f);
    CHECK_THROWS((void)r.cmp(f));
}

TEST_CASE("string round trips") {
    CHECK(Scalar::rational(5).str() == "5");
    CHECK(Scalar::parse(Scalar::floating(0.1).str(), Backend::Float) == Scalar::floating(0.1));
}
