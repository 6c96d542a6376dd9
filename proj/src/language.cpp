#include "negabeta/language.hpp"

#include <algorithm>
#include <numeric>

namespace negabeta {

namespace {

// Sign s of the first difference at 1-based position k between a and b,
// in the sense that a < b iff s < 0.
int alt_sign(std::size_t k, int a, int b) {
    int diff = a - b;
    return (k % 2 == 0) ? diff : -diff;
}

} // namespace

Language::Language(ReferencePair ref, ShiftVariant variant)
    : ref_(std::move(ref)), variant_(variant), upper_(ref_.d_star.prepend({0})), top_(ref_.d.at(1)) {}

Language::Language(const BetaSpec& beta, ShiftVariant variant, std::size_t horizon)
    : Language(reference_pair(beta, horizon), variant) {}

const SymbolicSequence& Language::lower() const {
    return variant_ == ShiftVariant::ItoSadahiro ? ref_.d : ref_.d_star;
}

template <typename Visit>
void Language::walk(std::size_t n, Visit&& visit) const {
    const Word lo = lower().take(n);
    const Word hi = upper_.take(n);
    Word w(n);
    // ties[k] holds the suffix starts still equal to the bound prefix after k digits.
    std::vector<std::vector<std::size_t>> lo_ties(n + 1), hi_ties(n + 1);

    auto rec = [&](auto&& self, std::size_t k) -> void {
        visit(k, w);
        if (k == n) return;
        for (int a = 0; a <= top_; ++a) {
            auto& nl = lo_ties[k + 1];
            auto& nh = hi_ties[k + 1];
            nl.clear();
            nh.clear();
            bool ok = true;
            auto step = [&](const std::vector<std::size_t>& ties, const Word& bound, std::vector<std::size_t>& next,
                            bool lower_bound) {
                auto test = [&](std::size_t m) {
                    std::size_t j = k - m + 1;
                    int b = bound[j - 1];
                    if (a == b) {
                        next.push_back(m);
                        return;
                    }
                    int s = alt_sign(j, a, b);
                    if (lower_bound ? s < 0 : s > 0) ok = false;
                };
                for (std::size_t m : ties) {
                    test(m);
                    if (!ok) return;
                }
                test(k);
            };
            step(lo_ties[k], lo, nl, true);
            if (ok) step(hi_ties[k], hi, nh, false);
            if (!ok) continue;
            w[k] = a;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

bool Language::admits(const Word& w) const {
    for (int a : w)
        if (a < 0 || a > top_) return false;
    const std::size_t n = w.size();
    const Word lo = lower().take(n);
    const Word hi = upper_.take(n);
    for (std::size_t m = 0; m < n; ++m) {
        Word s(w.begin() + static_cast<std::ptrdiff_t>(m), w.end());
        Word l(lo.begin(), lo.begin() + static_cast<std::ptrdiff_t>(s.size()));
        Word h(hi.begin(), hi.begin() + static_cast<std::ptrdiff_t>(s.size()));
        if (alt_less(s, l) || alt_less(h, s)) return false;
    }
    return true;
}

std::vector<Word> Language::words(std::size_t n) const {
    std::vector<Word> out;
    walk(n, [&](std::size_t k, const Word& w) {
        if (k == n) out.emplace_back(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BigInt> Language::census(std::size_t n) const {
    std::vector<unsigned long long> c(n + 1, 0);
    walk(n, [&](std::size_t k, const Word&) { ++c[k]; });
    std::vector<BigInt> out;
    for (auto x : c) out.emplace_back(static_cast<unsigned long>(x));
    return out;
}

bool is_admissible_word(const Word& w, const BetaSpec& beta, ShiftVariant v) {
    return Language(reference_pair(beta, std::max<std::size_t>(kDefaultHorizon, w.size() + 1)), v).admits(w);
}

WordSet enumerate_words(std::size_t n, const BetaSpec& beta, ShiftVariant v) {
    Language lang(reference_pair(beta, std::max<std::size_t>(kDefaultHorizon, n + 1)), v);
    WordSet s = WordSet::from_words(lang.words(n), n);
    // Only length n is listed; fill the census of shorter lengths too.
    s.census = lang.census(n);
    s.listed_to = n;
    return s;
}

std::vector<BigInt> factor_complexity(std::size_t n, const SymbolicSequence& d_star) {
    std::vector<BigInt> h(n + 1);
    h[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt acc = 1;
        for (std::size_t k = 1; k <= m; ++k) {
            long c = d_star.at(k - 1) - d_star.at(k);
            if (k % 2 == 1) c = -c;
            if (c != 0) acc += c * h[m - k];
        }
        h[m] = acc;
    }
    return h;
}

bool at_least_golden(const ReferencePair& ref) {
    SeqComparison c = alt_compare_seq(ref.d, SymbolicSequence::periodic({1}, {0}));
    if (!c.decided) {
        throw Error(ErrorCode::UnknownAtHorizon,
                    "d(l_beta) agrees with 1(0) on " + std::to_string(c.position) + " digits");
    }
    return c.order <= 0;
}

Classification classify(const ReferencePair& ref) {
    Classification c;
    SeqComparison g = alt_compare_seq(ref.d, SymbolicSequence::periodic({1}, {0}));
    if (!g.decided) {
        throw Error(ErrorCode::UnknownAtHorizon,
                    "d(l_beta) agrees with 1(0) on " + std::to_string(g.position) + " digits");
    }
    bool ge = g.order <= 0;
    bool odd = ref.odd_periodic();
    c.s_tilde_coded = ge;
    c.s_coded = ge && !odd;
    c.transitive = c.s_coded;
    if (odd) c.periodic_odd = ref.d.period().size();

    if (!ge) {
        // d = 1 0^{2(i0-1)} 1 ...: the first difference with 1(0) is at an even position.
        std::size_t i0 = g.position / 2;
        c.i0 = i0;
        c.witness = Witness{{1}, Word(2 * i0 - 1, 0)};
    } else if (odd) {
        Language lang(ref, ShiftVariant::ItoSadahiro);
        const int top = ref.d.at(1);
        for (std::size_t p = 1; !c.witness && p <= 64; ++p) {
            for (int j = 0; j <= top; ++j) {
                if (alt_sign(p, ref.d.at(p), j) >= 0) continue; // need (-1)^p (d_p - j) < 0
                Word x = ref.d.take(p - 1);
                x.push_back(j);
                if (!lang.admits(x)) continue;
                c.witness = Witness{ref.d.period(), x};
                break;
            }
        }
    }
    return c;
}

Classification classify(const BetaSpec& beta, std::size_t horizon) {
    return classify(reference_pair(beta, horizon));
}

namespace {

// Comparison of the periodic sequence (w rotated by r)^inf against a bound.
class PeriodicCheck {
public:
    PeriodicCheck(const SymbolicSequence& bound, std::size_t n) {
        if (bound.is_periodic()) {
            limit_ = bound.prefix().size() + std::lcm(bound.period().size(), n);
            exact_ = true;
        } else {
            limit_ = bound.known_length();
        }
        digits_ = bound.take(limit_);
    }

    // < 0, 0, > 0 for psi < bound, psi == bound, psi > bound.
    int compare(const Word& w, std::size_t r) const {
        const std::size_t n = w.size();
        std::size_t idx = r;
        for (std::size_t k = 1; k <= limit_; ++k) {
            int a = w[idx];
            if (a != digits_[k - 1]) return alt_sign(k, a, digits_[k - 1]);
            if (++idx == n) idx = 0;
        }
        if (!exact_) throw Error(ErrorCode::HorizonTooShort, "periodic point undecided within the reference horizon");
        return 0;
    }

private:
    std::size_t limit_ = 0;
    bool exact_ = false;
    Word digits_;
};

} // namespace

BigInt count_periodic_points(std::size_t n, const ReferencePair& ref, PeriodicTarget target) {
    if (n == 0) return 1;
    const int top = ref.d.at(1);
    PeriodicCheck lower(ref.d, n);
    PeriodicCheck upper(ref.d_star.prepend({0}), n);
    bool strict = target == PeriodicTarget::Transformation;
    Word w(n, 0);
    unsigned long long count = 0;
    for (;;) {
        bool ok = true;
        for (std::size_t r = 0; r < n && ok; ++r) {
            if (lower.compare(w, r) < 0) ok = false;
            else {
                int u = upper.compare(w, r);
                if (u > 0 || (strict && u == 0)) ok = false;
            }
        }
        if (ok) ++count;
        std::size_t i = n;
        while (i > 0 && w[i - 1] == top) w[--i] = 0;
        if (i == 0) break;
        ++w[i - 1];
    }
    return BigInt(static_cast<unsigned long>(count));
}

BigInt count_periodic_points(std::size_t n, const BetaSpec& beta, PeriodicTarget target, std::size_t horizon) {
    return count_periodic_points(n, reference_pair(beta, horizon), target);
}

} // namespace negabeta
