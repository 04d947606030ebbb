#include "doctest.h"

#include <random>

#include "adw/scalar.hpp"

using namespace adw;

namespace {

// Small random scalars for property tests; numerators/denominators stay tiny
// so products of several of them remain cheap.
Scalar random_scalar(std::mt19937_64& rng) {
    auto small = [&rng]() {
        long num = static_cast<long>(rng() % 13) - 6;
        long den = static_cast<long>(rng() % 4) + 1;
        return Rational(num, den);
    };
    return Scalar(small(), small());
}

} // namespace

TEST_CASE("rational reduction invariants") {
    Rational r(6, 4);
    CHECK(r.str() == "3/2");
    CHECK(Rational(-6, 4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(4, 2) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("scalar addition examples") {
    CHECK(Scalar(1, 2) + Scalar(1, 2) == Scalar(1));
    Scalar x(Rational(-3, 7), Rational(2, 5));
    CHECK(Scalar(0) + x == x);
    Scalar a(Rational(1), Rational(1));
    Scalar b(Rational(-1), Rational(2));
    CHECK(a + b == Scalar(Rational(0), Rational(3)));
}

TEST_CASE("scalar multiplication examples") {
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    Scalar x(Rational(5, 3), Rational(-1, 2));
    CHECK(Scalar(1) * x == x);
    Scalar one_plus_i(Rational(1), Rational(1));
    Scalar one_minus_i(Rational(1), Rational(-1));
    CHECK(one_plus_i * one_minus_i == Scalar(2));
}

TEST_CASE("scalar inversion examples") {
    CHECK(Scalar(2).inv() == Scalar(1, 2));
    CHECK(Scalar::i().inv() == -Scalar::i());
    Scalar one_plus_i(Rational(1), Rational(1));
    CHECK(one_plus_i.inv() == Scalar(Rational(1, 2), Rational(-1, 2)));
    CHECK(one_plus_i * one_plus_i.inv() == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
}

TEST_CASE("field axioms hold exactly on random samples") {
    std::mt19937_64 rng(20240917);
    for (int trial = 0; trial < 300; ++trial) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
    }
}

TEST_CASE("textual round-trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK(Scalar::parse("1/2").str() == "1/2");
    CHECK(Scalar::parse("-1+1/2i") == Scalar(Rational(-1), Rational(1, 2)));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("3/4i") == Scalar(Rational(0), Rational(3, 4)));
    CHECK(Scalar::parse("0") == Scalar(0));
    CHECK(Scalar::parse(" 2 ") == Scalar(2));
    CHECK_THROWS_AS(Scalar::parse("1+"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1+2"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("i+1"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1//2"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
}

TEST_CASE("string quadruple round-trip") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Scalar a = random_scalar(rng);
        CHECK(Scalar::from_strings(a.to_strings()) == a);
    }
    auto s = Scalar(Rational(-7, 3), Rational(1, 6)).to_strings();
    CHECK(s[0] == "-7");
    CHECK(s[1] == "3");
    CHECK(s[2] == "1");
    CHECK(s[3] == "6");
}

TEST_CASE("large exact arithmetic does not overflow") {
    // 2^200 as a scalar, then back down; exercises the arbitrary-precision path.
    Scalar big(1);
    for (int k = 0; k < 200; ++k) big *= Scalar(2);
    Scalar small = big;
    for (int k = 0; k < 200; ++k) small *= Scalar(1, 2);
    CHECK(small == Scalar(1));
    CHECK(big.str().size() > 50);
}
