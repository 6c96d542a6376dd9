#include "doctest.h"
#include "helpers.hpp"

#include <random>

#include "negabeta/expansion.hpp"

using namespace negabeta;
using namespace testing_support;

TEST_CASE("t_step") {
    BetaSpec b = rat(5, 2);
    Step s = t_step({b.left(), 0});
    CHECK(s.digit == 2);
    CHECK(s.next.value == b.constant(Rational(-3, 14)));
    CHECK(s.next.index == 1);

    BetaSpec two = rat(2);
    s = t_step({two.constant(Rational(-2, 3)), 0});
    CHECK(s.digit == 2);
    CHECK(s.next.value == two.constant(Rational(-2, 3)));

    BetaSpec g = golden();
    s = t_step({g.left(), 0});
    CHECK(s.digit == 1);
    CHECK(s.next.value.is_zero());
}

TEST_CASE("expansions of l_beta") {
    CHECK(expand(golden().left(), 64).seq.to_string() == "1(0)");
    CHECK(expand(rat(2).left(), 64).seq.to_string() == "(2)");
    CHECK(expand(rat(3).left(), 64).seq.to_string() == "(3)");
    CHECK(expand(quintic().left(), 64).seq.to_string() == "2012(1)");
    CHECK(expand(plastic().left(), 64).seq == parse_sequence("100(11)"));
    CHECK(parse_sequence("100(11)").to_string() == "100(1)");

    Expansion e = expand(rat(5, 2).left(), 3);
    CHECK_FALSE(e.seq.is_periodic());
    CHECK(e.seq.prefix() == Word{2, 1, 1});
    CHECK(e.seq.aperiodic_certified());

    e = expand(rat(13, 10).left(), 22);
    CHECK(e.seq.prefix() == parse_word("1001111111110011100100"));
    e = expand(rat(3, 2).left(), 18);
    CHECK(e.seq.prefix() == parse_word("100001001001111100"));
}

TEST_CASE("corrected sequences") {
    CHECK(corrected(parse_sequence("(2)")).to_string() == "(10)");
    CHECK(corrected(parse_sequence("1(0)")).to_string() == "1(0)");
    CHECK(corrected(parse_sequence("(211)")).to_string() == "(2100)");
    CHECK(corrected(parse_sequence("(21)")).to_string() == "(21)");
    CHECK(corrected(parse_sequence("2012(1)")).to_string() == "2012(1)");
    CHECK_THROWS_AS(corrected(parse_sequence("1(0)"), true), Error);
    CHECK_THROWS_AS(corrected(parse_sequence("(120)")), Error);
}

TEST_CASE("evaluate") {
    BetaSpec g = golden();
    Expansion e = expand(g.left(), 16);
    CHECK(evaluate_exact(e) == g.left());
    CHECK(evaluate_exact(e) == -(g.constant(1) / g.value()));

    BetaSpec two = rat(2);
    Expansion e2{0, parse_sequence("(2)"), two};
    RationalInterval v = evaluate(e2, Rational(1, 1000));
    CHECK(v.lo == Rational(-2, 3));
    CHECK(v.hi == Rational(-2, 3));
    Expansion z{0, parse_sequence("(0)"), two};
    CHECK(evaluate(z, Rational(1, 10)).hi == 0);

    Expansion big = expand(rat(5, 2).constant(5), 40);
    CHECK(big.integer_part_length > 0);
    RationalInterval iv = evaluate(big, Rational(1, 1000000));
    CHECK(iv.contains(5));
    CHECK(iv.width() < Rational(1, 1000));
}

TEST_CASE("reference pairs") {
    auto rp = reference_pair(golden(), 64);
    CHECK(rp.d.to_string() == "1(0)");
    CHECK(rp.d_star.to_string() == "1(0)");
    rp = reference_pair(rat(2), 64);
    CHECK(rp.d.to_string() == "(2)");
    CHECK(rp.d_star.to_string() == "(10)");
    CHECK(rp.odd_periodic());
    rp = reference_pair(quintic(), 64);
    CHECK(rp.d.to_string() == "2012(1)");
    CHECK(rp.d_star.to_string() == "2012(1)");
    CHECK_FALSE(rp.odd_periodic());
}

TEST_CASE("round trip and shift commutation on random points") {
    std::mt19937 rng(3);
    for (BetaSpec beta : {rat(5, 2), rat(13, 10), rat(7, 3), rat(2)}) {
        RationalInterval I{beta.left().as_rational().value(), beta.right().as_rational().value()};
        std::uniform_int_distribution<int> num(0, 999);
        for (int t = 0; t < 50; ++t) {
            Rational x = I.lo + I.width() * frac(num(rng), 1000);
            Expansion e = expand(beta.constant(x), 60);
            CHECK(e.integer_part_length == 0);
            RationalInterval v = evaluate(e, Rational(1, 1000000));
            CHECK(v.contains(x));
            if (e.seq.is_periodic()) CHECK(v.lo == v.hi);
            Step s = t_step({beta.constant(x), 0});
            Expansion f = expand(s.next.value, 59);
            CHECK(f.seq.take(59) == e.seq.drop(1).take(59));
        }
    }
}

TEST_CASE("periodic l-expansions never end an odd period with 0") {
    // beta = m (integer) and algebraic roots with known periodic expansions
    for (long m = 2; m <= 6; ++m) {
        auto d = reference_pair(rat(m), 16).d;
        REQUIRE(d.is_periodic());
        if (d.purely_periodic() && d.period().size() % 2 == 1) CHECK(d.period().back() != 0);
    }
    for (BetaSpec b : {golden(), plastic(), quintic()}) {
        auto d = reference_pair(b, 64).d;
        REQUIRE(d.is_periodic());
        if (d.purely_periodic() && d.period().size() % 2 == 1) CHECK(d.period().back() != 0);
    }
}

TEST_CASE("l-expansions decrease in the alternating order as beta grows") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> q(2, 40);
    for (int t = 0; t < 60; ++t) {
        int a = q(rng), b = q(rng);
        Rational b1 = frac(a + q(rng), a), b2 = frac(b + q(rng), b);
        if (b1 == b2) continue;
        if (b1 > b2) std::swap(b1, b2);
        auto d1 = reference_pair(beta_from_rational(b1), 200).d;
        auto d2 = reference_pair(beta_from_rational(b2), 200).d;
        CHECK(alt_compare_seq(d2, d1).order < 0);
    }
}
