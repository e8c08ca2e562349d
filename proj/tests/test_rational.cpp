#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

#include "kcolor/errors.hpp"
#include "kcolor/rational.hpp"

using kcolor::ParseError;
using kcolor::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    CHECK(Rational() == Rational(0));
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4).num() == -3);
    CHECK(Rational(-6, 4).den() == 2);
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 3) > Rational(2));
    CHECK(Rational(1, 3) <= Rational(2, 6));
    // a case where double arithmetic would tie
    CHECK(Rational(10000000000000001, 10000000000000000) > Rational(1));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(6, 3).ceil() == 2);
    CHECK(Rational(0).ceil() == 0);
}

TEST_CASE("overflow throws instead of wrapping") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(big), std::overflow_error);
    CHECK_THROWS_AS(Rational(big) * Rational(big), std::overflow_error);
    CHECK_THROWS_AS(Rational(big, 2) * Rational(3), std::overflow_error);
    // reduction can rescue a large intermediate
    CHECK(Rational(big, 3) * Rational(3, big) == Rational(1));
}

TEST_CASE("parse and canonical text") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-1/3") == Rational(-1, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0/5") == Rational(0));
    CHECK(Rational(2).str() == "2/1");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("parse round-trips the canonical form") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
        auto den = static_cast<std::int64_t>(rng() % 1000) + 1;
        Rational r(num, den);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field arithmetic identities on random values") {
    std::mt19937_64 rng(11);
    auto draw = [&] {
        auto num = static_cast<std::int64_t>(rng() % 41) - 20;
        auto den = static_cast<std::int64_t>(rng() % 20) + 1;
        return Rational(num, den);
    };
    for (int i = 0; i < 500; ++i) {
        Rational a = draw();
        Rational b = draw();
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
    }
}
