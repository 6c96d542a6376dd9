#include "doctest.h"

#include <numeric>
#include <random>

#include "negabeta/order.hpp"

using namespace negabeta;

TEST_CASE("alt_compare on words") {
    CHECK(alt_compare({1, 0, 1}, {1, 0, 0}) < 0);
    CHECK(alt_compare({2, 0, 1, 1}, {2, 0, 1, 2}) < 0);
    CHECK(alt_compare({2, 1, 1}, {1, 0, 0}) < 0);
    CHECK(alt_compare({3, 1}, {3, 1}) == 0);
    CHECK(alt_compare({}, {}) == 0);
    try {
        alt_compare({1}, {1, 0});
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LengthMismatch);
    }
}

TEST_CASE("alt_compare_seq") {
    auto one_zero = parse_sequence("1(0)");
    auto c = alt_compare_seq(one_zero, one_zero);
    CHECK(c.order == 0);
    CHECK(c.decided);
    CHECK(alt_compare_seq(parse_sequence("(2)"), parse_sequence("(10)")).order < 0);
    auto r = alt_compare_seq(parse_sequence("(100)"), one_zero);
    CHECK(r.order > 0);
    CHECK(r.position == 4);

    auto t = alt_compare_seq(parse_sequence("101..."), parse_sequence("1(01)"));
    CHECK_FALSE(t.decided);
    CHECK_THROWS_AS(alt_compare_seq_exact(parse_sequence("101..."), parse_sequence("1(01)")), Error);
    CHECK(alt_compare_seq(parse_sequence("100..."), parse_sequence("1(01)")).order > 0);
}

TEST_CASE("concatenation rules") {
    // position 1 is odd, so (1) < (0)
    auto r = concat_order_check({1}, {0}, {1});
    CHECK(r.u_v < 0);
    CHECK(r.wu_wv > 0); // odd |w| reverses: (1,0) < (1,1)
    CHECK(alt_less({1, 0}, {1, 1}));
    CHECK(r.prepend_parity_rule);
    r = concat_order_check({1}, {0}, {0, 0});
    CHECK(r.wu_wv < 0); // (0,0,1) < (0,0,0)
    CHECK(alt_less({0, 0, 1}, {0, 0, 0}));
    CHECK(r.prepend_parity_rule);
    r = concat_order_check({1}, {0}, {7});
    CHECK(r.uw_vw < 0); // (1,7) < (0,7)
    CHECK(r.append_preserves);
}

TEST_CASE("canonical form of periodic sequences") {
    auto s = SymbolicSequence::periodic({2, 0, 1, 2}, {1});
    CHECK(s.prefix() == Word{2, 0, 1, 2});
    CHECK(s.period() == Word{1});
    s = SymbolicSequence::periodic({1, 1}, {1, 1});
    CHECK(s.prefix().empty());
    CHECK(s.period() == Word{1});
    s = SymbolicSequence::periodic({}, {1, 0, 1, 0});
    CHECK(s.period() == Word{1, 0});
    s = SymbolicSequence::periodic({2, 1}, {2, 1});
    CHECK(s.prefix().empty());
    CHECK(s.period() == Word{2, 1});
    s = SymbolicSequence::periodic({3, 0, 1}, {0, 1});
    CHECK(s.prefix() == Word{3});
    CHECK(s.period() == Word{0, 1});
    CHECK(s.at(0) == 0);
    CHECK(s.take(6) == Word{3, 0, 1, 0, 1, 0});
    CHECK(s.drop(2).to_string() == "(10)");
}

TEST_CASE("digit-string syntax") {
    CHECK(parse_sequence("2012(1)").to_string() == "2012(1)");
    CHECK(parse_sequence("2012(1)").prefix() == Word{2, 0, 1, 2});
    auto wide = parse_sequence("1,10,3,(0)");
    CHECK(wide.prefix() == Word{1, 10, 3});
    CHECK(wide.to_string() == "1,10,3,(0)");
    auto t = parse_sequence("211...");
    CHECK_FALSE(t.is_periodic());
    CHECK(t.known_length() == 3);
    CHECK_THROWS_AS(t.at(4), Error);
    CHECK(parse_word("3021") == Word{3, 0, 2, 1});
    CHECK(parse_word("12,0,3") == Word{12, 0, 3});
    CHECK(format_word({1, 0, 0}) == "100");
    CHECK_THROWS_AS(parse_sequence("12(3"), Error);
    CHECK_THROWS_AS(parse_sequence("1()"), Error);
}

TEST_CASE("alternating order properties") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dig(0, 2), len(1, 6);
    auto rnd = [&](int n) {
        Word w(static_cast<std::size_t>(n));
        for (auto& x : w) x = dig(rng);
        return w;
    };
    for (int t = 0; t < 500; ++t) {
        int n = len(rng);
        Word a = rnd(n), b = rnd(n), c = rnd(n);
        CHECK((alt_compare(a, b) < 0) == (alt_compare(b, a) > 0));
        if (alt_less(a, b) && alt_less(b, c)) CHECK(alt_less(a, c));
        if (alt_compare(a, b) == 0) CHECK(a == b);
        if (a != b) {
            auto r = concat_order_check(a, b, rnd(len(rng) - 1));
            CHECK(r.append_preserves);
            CHECK(r.prepend_parity_rule);
        }
    }
}

TEST_CASE("periodic comparison agrees with unrolled prefixes") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dig(0, 1), len(0, 3), plen(1, 3);
    for (int t = 0; t < 300; ++t) {
        auto rnd = [&](int n) {
            Word w(static_cast<std::size_t>(n));
            for (auto& x : w) x = dig(rng);
            return w;
        };
        auto x = SymbolicSequence::periodic(rnd(len(rng)), rnd(plen(rng)));
        auto y = SymbolicSequence::periodic(rnd(len(rng)), rnd(plen(rng)));
        std::size_t n = std::max(x.prefix().size(), y.prefix().size()) + std::lcm(x.period().size(), y.period().size()) + 1;
        auto c = alt_compare_seq(x, y);
        CHECK(c.decided);
        CHECK(c.order == alt_compare(x.take(n), y.take(n)));
        CHECK((c.order == 0) == (x == y));
    }
}
