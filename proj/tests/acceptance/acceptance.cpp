// One PASS/FAIL line per acceptance criterion. Exit status 1 if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "negabeta/codes.hpp"
#include "negabeta/gaps.hpp"
#include "negabeta/language.hpp"
#include "negabeta/series.hpp"

using namespace negabeta;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

BetaSpec rat(long p, long q = 1) { return beta_from_rational(BigInt(p), BigInt(q)); }

BetaSpec poly(std::vector<long> c, const Rational& lo, const Rational& hi) {
    std::vector<BigInt> b(c.begin(), c.end());
    return beta_from_poly(b, {lo, hi});
}

BetaSpec golden() { return poly({1, -1, -1}, 1, 2); }

std::string name_of(const BetaSpec& b) {
    std::string s = b.describe();
    return s.size() > 24 ? s.substr(0, s.find(" on ")) : s;
}

std::set<std::string> strings(const std::vector<Word>& ws) {
    std::set<std::string> out;
    for (const Word& w : ws) out.insert(format_word(w));
    return out;
}

Outcome criterion1() {
    Outcome o;
    BetaSpec b = rat(5, 2);
    Word d = expand(b.left(), 16).seq.take(3);
    o.require(d == Word{2, 1, 1}, "d(l_5/2) starts " + format_word(d));
    SeriesResult lap = lap_series(reference_pair(b, 64), 3);
    o.require(lap.series[1] == 3 && lap.series[2] == 8 && lap.series[3] == 20,
              "L_1..L_3 = " + lap.series[1].get_str() + "," + lap.series[2].get_str() + "," + lap.series[3].get_str());
    std::set<std::string> listed = {"211", "210", "222", "221", "102", "101", "100", "112", "111", "110",
                                    "122", "121", "002", "001", "000", "012", "011", "010", "022", "021"};
    for (ShiftVariant v : {ShiftVariant::ItoSadahiro, ShiftVariant::Corrected})
        o.require(strings(enumerate_words(3, b, v).words) == listed, "admissible words of length 3 differ");
    return o;
}

Outcome criterion2() {
    Outcome o;
    BetaSpec g = golden();
    ReferencePair ref = reference_pair(g, 64);
    o.require(ref.d == SymbolicSequence::periodic({1}, {0}), "d = " + ref.d.to_string());
    const std::size_t N = 16;
    IntSeries closed = IntSeries::from_integers(std::vector<long>{1, 1}, N) / IntSeries::from_integers(std::vector<long>{1, -1, -1}, N);
    SeriesResult z = zeta_transformation(ref, N);
    o.require(z.valid_to >= N && z.series.truncate(N) == closed, "zeta differs from (1+z)/(1-z-z^2)");
    SeriesResult l = lap_series(ref, N);
    IntSeries rhs = IntSeries::from_integers(std::vector<long>{1, 0, -1}, N) * l.series;
    o.require(l.valid_to >= N && z.series.truncate(N) == rhs.truncate(N), "zeta != (1-z^2) L");
    return o;
}

Outcome criterion3_quartic() {
    Outcome o;
    // x^4 + 2x^3 + x^2 - x - 1 = (x + 1)(x^3 + x^2 - 1): real roots -1 and ~0.7549.
    for (auto [lo, hi] : {std::pair{Rational(1), Rational(4)}, std::pair{Rational(2), Rational(3)}}) {
        try {
            BetaSpec b = poly({1, 2, 1, -1, -1}, lo, hi);
            ReferencePair ref = reference_pair(b, 64);
            o.require(ref.d == parse_sequence("2012(1)"), "d = " + ref.d.to_string());
            BlockStructure bs = block_structure(ref.d, 32);
            o.require(bs.blocks.size() == 1 && bs.blocks[0].length() == 3 && bs.blocks[0].p == 1, "block structure");
        } catch (const Error& e) {
            o.require(false, "no base on [" + lo.get_str() + ", " + hi.get_str() + "]: " + e.what());
        }
    }
    o.notes.push_back("x^4+2x^3+x^2-x-1 = (x+1)(x^3+x^2-1) has no root > 1");
    return o;
}

Outcome criterion3_quintic() {
    Outcome o;
    BetaSpec b = poly({1, -2, -2, -1, 1, 1}, Rational(27, 10), Rational(29, 10));
    ReferencePair ref = reference_pair(b, 64);
    o.require(ref.d == parse_sequence("2012(1)"), "d = " + ref.d.to_string());
    BlockStructure bs = block_structure(ref.d, 32);
    o.require(bs.blocks.size() == 1 && bs.blocks[0].length() == 3 && bs.blocks[0].p == 1, "block structure");
    return o;
}

Outcome criterion4() {
    Outcome o;
    SymbolicSequence d = parse_sequence("302(1)");
    WordSet odd = build_delta_odd(d, 7);
    for (const char* w : {"3", "302", "30211", "3021111"}) o.require(odd.contains(parse_word(w)), std::string("Delta_odd lacks ") + w);
    WordSet gamma = build_gamma(d, 6).all();
    for (const char* w : {"0", "1", "2", "31", "32", "300", "301", "3022", "30210", "302112"})
        o.require(gamma.contains(parse_word(w)), std::string("Gamma lacks ") + w);
    o.require(strings(gamma.words) == std::set<std::string>{"0", "1", "2", "31", "32", "300", "301", "3022", "30210", "302112"},
              "Gamma up to length 6 has extra words");
    return o;
}

Outcome criterion5() {
    Outcome o;
    const std::size_t N = 8;
    std::vector<BetaSpec> betas = {rat(2), rat(5, 2), rat(3), golden(), gamma_n(1), rat(13, 10), rat(3, 2)};
    for (const BetaSpec& b : betas) {
        const std::string tag = name_of(b) + ": ";
        ReferencePair ref = reference_pair(b, 512);
        std::vector<BigInt> h = factor_complexity(N, ref.d_star);
        std::vector<BigInt> census = Language(ref, ShiftVariant::Corrected).census(N);
        o.require(h == census, tag + "factor complexity != census");

        SeriesResult zt = zeta_transformation(ref, N);
        SeriesResult zs = zeta_shift(ref, N);
        IntSeries lt = zt.series.log_derivative(), ls = zs.series.log_derivative();
        for (std::size_t n = 1; n <= N; ++n) {
            o.require(lt[n] == Rational(count_periodic_points(n, ref, PeriodicTarget::Transformation)),
                      tag + "transformation periodic points at n = " + std::to_string(n));
            o.require(ls[n] == Rational(count_periodic_points(n, ref, PeriodicTarget::Shift)),
                      tag + "shift periodic points at n = " + std::to_string(n));
        }

        IdentityReport rep = verify_identities(b, 24, N);
        for (const IdentityResidual& r : rep.items)
            if (r.applicable) o.require(r.zero(), tag + r.name + " residual " + r.max_abs().get_str());
        o.require(rep.at("kneading_factorization").applicable && rep.at("lap_complexity").applicable &&
                      rep.at("zeta_lap").applicable,
                  tag + "identity not checked");
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    Classification two = classify(rat(2));
    o.require(!two.s_coded && two.s_tilde_coded, "beta = 2");
    Classification t = classify(rat(13, 10));
    o.require(!t.transitive && t.witness.has_value(), "13/10 should be intransitive with a witness");
    if (t.witness) o.require(!is_admissible_word(t.witness->word(), rat(13, 10), ShiftVariant::ItoSadahiro), "witness admissible");
    Classification g = classify(golden());
    o.require(g.s_coded && g.transitive, "golden ratio should be coded");
    return o;
}

Outcome criterion7() {
    Outcome o;
    BetaSpec g = golden();
    FieldElement x = g.value();
    o.require((x.pow(-1) + x.pow(-2)) == g.constant(1), "1/g + 1/g^2 != 1");
    WordSet pair = WordSet::from_words({{1}, {0, 0}}, 2);
    RationalInterval k = kraft_sum(pair, g, 2);
    o.require(k.contains(Rational(1)), "Kraft enclosure of {1, 00} misses 1");

    BetaSpec b = rat(5, 2);
    WordSet c = build_code_C(b, 12);
    Rational prev = 0;
    for (std::size_t len = 1; len <= 12; ++len) {
        Rational s = kraft_sum(c, b, len).lo;
        o.require(s >= prev, "Kraft partial sums of C decrease at length " + std::to_string(len));
        prev = s;
    }
    o.require(prev > Rational(95, 100), "Kraft sum of C at length 12 is " + to_decimal(prev, 6));
    o.notes.push_back("C(5/2) Kraft to length 12 = " + to_decimal(prev, 6));
    return o;
}

Outcome criterion8() {
    Outcome o;
    BetaSpec g1 = poly({1, 0, -1, -1}, 1, 2);
    o.require(expand(g1.left(), 64).seq == parse_sequence("100(11)"), "d(l_gamma_1)");
    o.require(format_word(psi_prefix(43)) == "1001110010010011100111001110010010011100100", "psi prefix");

    BetaSpec b = rat(13, 10);
    CascadeParse p = decompose_expansion(b, 300);
    o.require(p.n == 1 && format_word(p.u) == "100" && format_word(p.v) == "11", "parse alphabet");
    o.require(p.parsed_length + 3 > 300, "parse stopped at " + std::to_string(p.parsed_length));

    std::size_t sampled = 0;
    for (const GapInterval& gap : all_gaps(b)) {
        const Word uk = u_word(static_cast<long>(gap.k));
        const Word ukm = u_word(static_cast<long>(gap.k) - 1);
        const Word head(ukm.begin() + static_cast<std::ptrdiff_t>(gap.i), ukm.end());
        const Word a = concat(head, concat(ukm, ukm)), c = concat(head, concat(uk, uk));
        // midpoint and two more interior points
        for (Rational t : {Rational(1, 2), Rational(1, 7), Rational(5, 6)}) {
            FieldElement x = gap.left + (gap.right - gap.left) * t;
            Word e = expand(x, 64).seq.take(std::max(a.size(), c.size()));
            o.require(is_prefix(a, e) || is_prefix(c, e), "gap A_" + std::to_string(gap.k) + "," + std::to_string(gap.i) +
                                                              " point expands as " + format_word(e));
            ++sampled;
        }
    }
    o.require(sampled > 0, "no gaps");
    return o;
}

} // namespace

int main() {
    struct Item {
        std::string id;
        std::string title;
        std::function<Outcome()> run;
        bool counted;
    };
    std::vector<Item> items = {
        {"1", "beta = 5/2 digits, laps 3/8/20, twenty admissible words", criterion1, true},
        {"2", "golden ratio: d = 1(0), closed-form zeta, zeta = (1-z^2)L", criterion2, true},
        {"3", "quartic x^4+2x^3+x^2-x-1: expansion 2012(1), one block (3, 1)", criterion3_quartic, true},
        {"3b", "(informational) quintic root ~2.7843: expansion 2012(1), one block (3, 1)", criterion3_quintic, false},
        {"4", "d = 302(1): Delta_odd and Gamma prefixes", criterion4, true},
        {"5", "oracle equivalence for 2, 5/2, 3, golden, gamma_1, 13/10, 3/2 (n <= 8)", criterion5, true},
        {"6", "classification of 2, 13/10 and the golden ratio", criterion6, true},
        {"7", "Kraft sums: {1, 00} at the golden ratio, C at 5/2", criterion7, true},
        {"8", "cascade: gamma_1, psi prefix, 13/10 parse and gap points", criterion8, true},
    };
    bool all = true;
    for (const Item& it : items) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (it.counted && !o.pass) all = false;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << it.id << ": " << it.title << " ("
                  << static_cast<long>(ms) << " ms)";
        for (const std::string& n : o.notes) std::cout << " | " << n;
        std::cout << '\n';
    }
    return all ? 0 : 1;
}
