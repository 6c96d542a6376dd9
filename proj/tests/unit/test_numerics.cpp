#include "doctest.h"
#include "helpers.hpp"

#include <random>

using namespace negabeta;
using namespace testing_support;

TEST_CASE("rational bases") {
    CHECK(rat(5, 2).d1() == 2);
    CHECK(rat(2).d1() == 2);
    CHECK(rat(10, 4).rational_value() == Rational(5, 2));
    CHECK(rat(13, 10).d1() == 1);
    try {
        rat(1, 1);
        FAIL("expected NotGreaterThanOne");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotGreaterThanOne);
    }
    CHECK_THROWS_AS(rat(1, 2), Error);
}

TEST_CASE("algebraic bases") {
    BetaSpec g = golden();
    CHECK_FALSE(g.is_rational());
    CHECK(g.d1() == 1);
    CHECK(g.approx() == doctest::Approx(1.6180339887));
    CHECK(plastic().approx() == doctest::Approx(1.3247179572));
    CHECK(quintic().approx() == doctest::Approx(2.7843303181));
    CHECK(quintic().d1() == 2);

    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Internal;
    };
    // (x+1)(x^3+x^2-1): roots -1 and ~0.7549 only
    CHECK(code_of([] { poly_root({1, 2, 1, -1, -1}, 2, 1, 3, 1); }) == ErrorCode::NoRootIsolated);
    CHECK(code_of([] { poly_root({1, 2, 1, -1, -1}, 0, 1, 1, 1); }) == ErrorCode::RootNotGreaterThanOne);
    CHECK(code_of([] { poly_root({1, 0, -5, 0, 4}, 0, 1, 3, 1); }) == ErrorCode::NoRootIsolated); // roots 1, 2
    CHECK(code_of([] { poly_root({7}, 0, 1, 3, 1); }) == ErrorCode::NoRootIsolated);

    // a rational root reached through a polynomial becomes a rational base
    BetaSpec three_halves = poly_root({2, -3}, 1, 1, 2, 1);
    CHECK(three_halves.is_rational());
    CHECK(three_halves.rational_value() == Rational(3, 2));
    // (x-2)(x+1) and (2x-5)(x^2-x-1) isolated away from the endpoints
    BetaSpec two = poly_root({1, -1, -2}, 3, 2, 5, 2);
    CHECK(two.is_rational());
    CHECK(two.rational_value() == Rational(2));
    BetaSpec five_halves = poly_root({2, -7, 3, 5}, 9, 4, 3, 1);
    CHECK(five_halves.is_rational());
    CHECK(five_halves.rational_value() == Rational(5, 2));
    CHECK_FALSE(poly_root({2, -7, 3, 5}, 3, 2, 2, 1).is_rational());
}

TEST_CASE("field identities") {
    BetaSpec g = golden();
    FieldElement b = g.value();
    CHECK((b * b - b - Rational(1)).is_zero());
    CHECK(g.left() == -(g.constant(1) / b));
    CHECK(g.left() + g.right() * b == g.constant(0)); // l = -beta r
    BetaSpec q = quintic();
    FieldElement x = q.value();
    CHECK((x.pow(5) - x.pow(4) * Rational(2) - x.pow(3) * Rational(2) - x * x + x + Rational(1)).is_zero());
}

TEST_CASE("reducible defining polynomial") {
    // (x^2 - x - 1)(x - 3), root on [1, 2] is the golden ratio
    BetaSpec g = poly_root({1, -4, 2, 3}, 1, 1, 2, 1);
    FieldElement b = g.value();
    CHECK((b * b - b - Rational(1)).is_zero());
    FieldElement t = b - Rational(3);
    CHECK_FALSE(t.is_zero());
    CHECK((t * (g.constant(1) / t) - Rational(1)).is_zero());
    CHECK(fe_floor(b) == 1);
}

TEST_CASE("fe_floor") {
    BetaSpec b = rat(5, 2);
    CHECK(fe_floor(b.constant(Rational(25, 14)) + Rational(5, 7)) == 2);
    CHECK(fe_floor(b.constant(0)) == 0);
    CHECK(fe_floor(b.constant(Rational(-1, 3))) == -1);
    CHECK(fe_floor(golden().value()) == 1);
    CHECK(fe_floor(golden().value() * golden().value()) == 2);
    // exact boundary: beta^2 - beta = 1
    FieldElement one = golden().value() * golden().value() - golden().value();
    CHECK(fe_floor(one) == 1);
    CHECK(fe_floor(-one) == -1);
}

TEST_CASE("fe_compare") {
    BetaSpec b = rat(5, 2);
    CHECK(fe_compare(b.left(), b.right()) < 0);
    CHECK(fe_compare(b.left(), b.left()) == 0);
    CHECK(fe_compare(b.constant(Rational(-3, 14)), b.left()) > 0);
    CHECK(b.left() == b.constant(Rational(-5, 7)));
    CHECK(b.right() == b.constant(Rational(2, 7)));
}

TEST_CASE("floor and ring properties on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-20, 20);
    for (BetaSpec beta : {golden(), plastic(), quintic(), rat(7, 3)}) {
        auto rnd = [&] {
            FieldElement x = beta.constant(0);
            for (int i = 0; i < 3; ++i) x = x * beta.value() + frac(coef(rng), 1 + (coef(rng) & 7));
            return x;
        };
        for (int t = 0; t < 40; ++t) {
            FieldElement x = rnd(), y = rnd(), z = rnd();
            CHECK((x + y) * z == x * z + y * z);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x - x == beta.constant(0));
            BigInt f = fe_floor(x);
            CHECK(fe_compare(beta.constant(Rational(f)), x) <= 0);
            CHECK(fe_compare(x, beta.constant(Rational(f + 1))) < 0);
            if (!y.is_zero()) CHECK((x / y) * y == x);
        }
    }
}

TEST_CASE("enclosures shrink on demand") {
    BetaSpec p = plastic();
    FieldElement x = p.value() * p.value();
    RationalInterval iv = x.enclose(Rational(1, 1000000));
    CHECK(iv.width() <= Rational(1, 1000000));
    CHECK(iv.lo.get_d() < 1.7548777 );
    CHECK(iv.hi.get_d() > 1.7548776);
}

TEST_CASE("compare_bases across fields") {
    CHECK(compare_bases(golden(), rat(3, 2)) > 0);
    CHECK(compare_bases(rat(13, 10), plastic()) < 0);
    CHECK(compare_bases(golden(), poly_root({1, -1, -1}, 3, 2, 2, 1)) == 0);
    CHECK(compare_bases(golden(), poly_root({1, -4, 2, 3}, 1, 1, 2, 1)) == 0);
    CHECK(compare_bases(golden(), plastic()) > 0);
    CHECK(compare_bases(rat(2), rat(4, 2)) == 0);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK(parse_rational("-0.125") == Rational(-1, 8));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("010") == 10);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
    CHECK(to_decimal(Rational(-5, 2), 4) == "-2.5");
}
