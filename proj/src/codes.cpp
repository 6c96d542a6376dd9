#include "negabeta/codes.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "negabeta/gaps.hpp"

namespace negabeta {

BlockStructure block_structure(const SymbolicSequence& d, std::size_t horizon) {
    if (d.known_length() < horizon)
        throw Error(ErrorCode::HorizonTooShort, "block scan to " + std::to_string(horizon) + " needs more digits of " +
                                                    d.to_string());
    BlockStructure bs;
    bs.scan_horizon = horizon;
    const int d1 = d.at(1);
    // Past the preperiod, d_k and d_{k+2n-1} are both periodic; agreement on one
    // full period there means agreement forever.
    const std::size_t known = d.known_length();
    std::size_t claimed = 0;
    for (std::size_t pos = 2; pos <= horizon; pos += 2) {
        if (pos <= claimed || d.at(pos) != d1) continue;
        Block b{pos / 2, 0};
        const std::size_t shift = b.length();
        std::size_t cap = known == kUnbounded ? d.prefix().size() + d.period().size() + shift + 1 : known - shift;
        while (b.p < cap && d.at(shift + b.p + 1) == d.at(b.p + 1)) ++b.p;
        if (known == kUnbounded && b.p == cap) {
            // d is purely periodic with period 2n-1.
            b.p = kUnbounded;
            bs.blocks.push_back(b);
            break;
        }
        bs.blocks.push_back(b);
        claimed = pos + b.p;
    }
    if (d.is_periodic()) bs.complete = horizon >= d.prefix().size() + d.period().size();
    return bs;
}

namespace {

WordSet single_zero(std::size_t max_len, std::size_t list_len) {
    WordSet s = WordSet::from_words({{0}}, max_len);
    if (list_len < max_len) {
        s.listed_to = list_len;
        if (list_len == 0) s.words.clear();
    }
    return s;
}

// Lower bound d*, upper bound 0d*, ties allowed.
bool admissible_under(const Word& w, const SymbolicSequence& ds) {
    const std::size_t n = w.size();
    const Word lo = ds.take(n);
    Word hi{0};
    Word rest = ds.take(n);
    hi.insert(hi.end(), rest.begin(), rest.end());
    for (std::size_t m = 0; m < n; ++m) {
        Word s(w.begin() + static_cast<std::ptrdiff_t>(m), w.end());
        Word l(lo.begin(), lo.begin() + static_cast<std::ptrdiff_t>(s.size()));
        Word h(hi.begin(), hi.begin() + static_cast<std::ptrdiff_t>(s.size()));
        if (alt_less(s, l) || alt_less(h, s)) return false;
    }
    return true;
}

using Census = std::vector<BigInt>;

struct Tagged {
    Word w;
    std::size_t block; // owning block for Gamma_0'
};

class Builder {
public:
    Builder(const SymbolicSequence& d, std::size_t max_len, std::size_t list_len)
        : d_(corrected(d)), N_(max_len), M_(std::min(max_len, list_len)) {
        if (!d_.is_periodic() && d_.known_length() < 2 * N_ + 2)
            throw Error(ErrorCode::HorizonTooShort, "families to length " + std::to_string(N_) + " need " +
                                                        std::to_string(2 * N_ + 2) + " digits, have " +
                                                        std::to_string(d_.known_length()));
        d1_ = d_.at(1);
        bl_ = block_structure(d_, N_ + 2).blocks;
        build_bases();
        chain_counts_ = chain_counts(false);
    }

    bool has_blocks() const { return !bl_.empty(); }
    const SymbolicSequence& d() const { return d_; }

    WordSet gamma0() const { return plain(g0_); }
    WordSet delta0_odd() const { return plain(dodd0_); }

    WordSet gamma0_prime() const {
        std::vector<Word> ws;
        for (const auto& t : g0p_) ws.push_back(t.w);
        return plain(ws);
    }

    WordSet gamma1() const {
        Census c(N_ + 1, 0);
        for (std::size_t t = 0; t < bl_.size(); ++t)
            for (std::size_t lc = 1; lc <= N_; ++lc) {
                if (chain_counts_[t][lc] == 0) continue;
                for (const auto& y : g0_)
                    if (y.size() >= bl_[t].p + 2 && lc + y.size() <= N_) c[lc + y.size()] += chain_counts_[t][lc];
            }
        std::vector<Word> ws;
        for_each_chain(M_, false, [&](const std::vector<std::size_t>& ch, const Word& pref) {
            for (const auto& y : g0_)
                if (y.size() >= bl_[ch.back()].p + 2 && pref.size() + y.size() <= M_) ws.push_back(concat(pref, y));
        });
        return assemble(std::move(ws), std::move(c));
    }

    WordSet gamma1_prime() const {
        Census c(N_ + 1, 0);
        for (std::size_t s = 0; s < bl_.size(); ++s)
            for (std::size_t lc = 1; lc <= N_; ++lc) {
                if (chain_counts_[s][lc] == 0) continue;
                for (const auto& y : g0p_)
                    if (bl_[s].p < bl_[y.block].length() && lc + y.w.size() <= N_)
                        c[lc + y.w.size()] += chain_counts_[s][lc];
            }
        std::vector<Word> ws;
        for_each_chain(M_, false, [&](const std::vector<std::size_t>& ch, const Word& pref) {
            for (const auto& y : g0p_)
                if (bl_[ch.back()].p < bl_[y.block].length() && pref.size() + y.w.size() <= M_)
                    ws.push_back(concat(pref, y.w));
        });
        return assemble(std::move(ws), std::move(c));
    }

    WordSet delta1_odd() const {
        Census c(N_ + 1, 0);
        for (std::size_t t = 0; t < bl_.size(); ++t)
            for (std::size_t lc = 1; lc <= N_; ++lc) {
                if (chain_counts_[t][lc] == 0) continue;
                for (const auto& x : dodd0_)
                    if (x.size() > bl_[t].p && lc + x.size() <= N_) c[lc + x.size()] += chain_counts_[t][lc];
            }
        std::vector<Word> ws;
        for_each_chain(M_, false, [&](const std::vector<std::size_t>& ch, const Word& pref) {
            for (const auto& x : dodd0_)
                if (x.size() > bl_[ch.back()].p && pref.size() + x.size() <= M_) ws.push_back(concat(pref, x));
        });
        return assemble(std::move(ws), std::move(c));
    }

    WordSet delta_evn() const {
        std::vector<Word> ws;
        for (std::size_t n = 2; n <= N_; n += 2) ws.push_back(d_.take(n));
        for_each_chain(N_, false, [&](const std::vector<std::size_t>&, const Word& pref) {
            for (std::size_t n = 0; pref.size() + n <= N_; n += 2) {
                Word w = concat(pref, d_.take(n));
                if (admissible_under(w, d_)) ws.push_back(std::move(w));
            }
        });
        return WordSet::from_words(std::move(ws), N_, true);
    }

    // Level 0: p_t < 2n_1 - 1. Level i >= 1: 2n_i - 1 <= p_t < 2n_{i+1} - 1.
    std::size_t level(std::size_t t) const {
        std::size_t lev = 0;
        for (std::size_t i = 0; i < bl_.size(); ++i)
            if (bl_[i].length() <= bl_[t].p) lev = i + 1;
        return lev;
    }

    std::size_t max_level() const {
        std::size_t m = 0;
        for (std::size_t t = 0; t < bl_.size(); ++t) m = std::max(m, level(t));
        return m;
    }

    // Delta^(lev+1): B_{t_1}..B_{t_m}, p_{t_k} <= 2n_{t_{k+1}} - 1, p_{t_m} < 2n_{t_1} - 1,
    // level(t_m) = lev, every other level >= lev + 1.
    WordSet delta_level(std::size_t lev) const {
        Census c(N_ + 1, 0);
        for (std::size_t f = 0; f < bl_.size(); ++f) {
            const std::size_t lf = level(f);
            if (lf == lev && bl_[f].p < bl_[f].length() && bl_[f].length() <= N_) c[bl_[f].length()] += 1;
            if (lf < lev + 1 || bl_[f].length() > N_) continue;
            // cnt[s][len]: chains f..s, all at level >= lev + 1.
            std::vector<Census> cnt(bl_.size(), Census(N_ + 1, 0));
            cnt[f][bl_[f].length()] = 1;
            for (std::size_t len = 1; len <= N_; ++len)
                for (std::size_t s = 0; s < bl_.size(); ++s) {
                    if (cnt[s][len] == 0) continue;
                    for (std::size_t t = 0; t < bl_.size(); ++t) {
                        const std::size_t nl = len + bl_[t].length();
                        if (nl > N_ || bl_[s].p > bl_[t].length()) continue;
                        const std::size_t lt = level(t);
                        if (lt >= lev + 1) cnt[t][nl] += cnt[s][len];
                        if (lt == lev && bl_[t].p < bl_[f].length()) c[nl] += cnt[s][len];
                    }
                }
        }
        std::vector<Word> ws;
        for_each_chain(M_, true, [&](const std::vector<std::size_t>& ch, const Word& pref) {
            const std::size_t last = ch.back();
            if (level(last) != lev || bl_[last].p >= bl_[ch.front()].length()) return;
            for (std::size_t k = 0; k + 1 < ch.size(); ++k)
                if (level(ch[k]) < lev + 1) return;
            ws.push_back(pref);
        });
        return assemble(std::move(ws), std::move(c));
    }

    std::size_t max_len() const { return N_; }
    std::size_t list_len() const { return M_; }

private:
    void build_bases() {
        // Index windows for Gamma_0 (on n, word length n + 1) and Delta^0_odd (on odd lengths).
        struct Window {
            std::size_t lo, hi;
        };
        std::vector<Window> g_win, o_win;
        if (bl_.empty()) {
            g_win.push_back({0, kUnbounded});
            o_win.push_back({1, kUnbounded});
        } else {
            g_win.push_back({0, 2 * bl_[0].n - 2});
            o_win.push_back({1, 2 * bl_[0].n - 2});
            for (std::size_t i = 0; i < bl_.size(); ++i) {
                const std::size_t start = 2 * bl_[i].n + bl_[i].p;
                const std::size_t next = i + 1 < bl_.size() ? 2 * bl_[i + 1].n : kUnbounded;
                g_win.push_back({start, next == kUnbounded ? kUnbounded : next - 2});
                o_win.push_back({start, next == kUnbounded ? kUnbounded : next - 2});
            }
        }
        for (const auto& w : g_win)
            for (std::size_t n = w.lo; n <= w.hi && n + 1 <= N_; ++n) {
                const int dn1 = d_.at(n + 1);
                for (int j = 0; j < d1_; ++j) {
                    const int diff = dn1 - j;
                    // (-1)^{n+1} (d_{n+1} - j) < 0
                    if ((n % 2 == 0 ? -diff : diff) < 0) {
                        Word x = d_.take(n);
                        x.push_back(j);
                        g0_.push_back(std::move(x));
                    }
                }
            }
        for (const auto& w : o_win)
            for (std::size_t len = w.lo; len <= w.hi && len <= N_; ++len)
                if (len % 2 == 1) dodd0_.push_back(d_.take(len));
        for (std::size_t i = 0; i < bl_.size(); ++i) {
            const Block& b = bl_[i];
            const std::size_t len = 2 * b.n + b.p;
            if (len > N_) continue;
            // (-1)^p d_{p+1} > (-1)^p j > (-1)^p d_{2n+p}
            const long sgn = b.p % 2 == 0 ? 1 : -1;
            for (int j = 0; j < d1_; ++j)
                if (sgn * d_.at(b.p + 1) > sgn * j && sgn * j > sgn * d_.at(len)) {
                    Word x = d_.take(len - 1);
                    x.push_back(j);
                    g0p_.push_back({std::move(x), i});
                }
        }
    }

    // Chains B_{k_1}..B_{k_m}: p_{k_i} < 2n_{k_{i+1}} - 1 (or <= when `loose`).
    bool links(std::size_t s, std::size_t t, bool loose) const {
        return loose ? bl_[s].p <= bl_[t].length() : bl_[s].p < bl_[t].length();
    }

    std::vector<Census> chain_counts(bool loose) const {
        std::vector<Census> cnt(bl_.size(), Census(N_ + 1, 0));
        for (std::size_t t = 0; t < bl_.size(); ++t)
            if (bl_[t].length() <= N_) cnt[t][bl_[t].length()] = 1;
        for (std::size_t len = 1; len <= N_; ++len)
            for (std::size_t s = 0; s < bl_.size(); ++s) {
                if (cnt[s][len] == 0) continue;
                for (std::size_t t = 0; t < bl_.size(); ++t)
                    if (len + bl_[t].length() <= N_ && links(s, t, loose))
                        cnt[t][len + bl_[t].length()] += cnt[s][len];
            }
        return cnt;
    }

    void for_each_chain(std::size_t max_len, bool loose,
                        const std::function<void(const std::vector<std::size_t>&, const Word&)>& visit) const {
        std::vector<std::size_t> ch;
        Word pref;
        std::function<void()> rec = [&] {
            if (!ch.empty()) visit(ch, pref);
            for (std::size_t t = 0; t < bl_.size(); ++t) {
                if (pref.size() + bl_[t].length() > max_len) continue;
                if (!ch.empty() && !links(ch.back(), t, loose)) continue;
                const std::size_t mark = pref.size();
                Word b = d_.take(bl_[t].length());
                pref.insert(pref.end(), b.begin(), b.end());
                ch.push_back(t);
                rec();
                ch.pop_back();
                pref.resize(mark);
            }
        };
        rec();
    }

    WordSet plain(const std::vector<Word>& ws) const {
        Census c(N_ + 1, 0);
        for (const auto& w : ws) c[w.size()] += 1;
        std::vector<Word> listed;
        for (const auto& w : ws)
            if (w.size() <= M_) listed.push_back(w);
        return assemble(std::move(listed), std::move(c));
    }

    WordSet assemble(std::vector<Word> ws, Census c) const {
        WordSet s = WordSet::from_words(std::move(ws), M_);
        s.census = std::move(c);
        s.complete_to = N_;
        s.listed_to = M_;
        return s;
    }

    SymbolicSequence d_;
    std::size_t N_;
    std::size_t M_;
    int d1_ = 0;
    std::vector<Block> bl_;
    std::vector<Word> g0_;
    std::vector<Word> dodd0_;
    std::vector<Tagged> g0p_;
    std::vector<Census> chain_counts_;
};

WordSet unite(const WordSet& a, const WordSet& b) {
    std::vector<Word> ws = a.words;
    ws.insert(ws.end(), b.words.begin(), b.words.end());
    WordSet s = WordSet::from_words(std::move(ws), std::min(a.listed_to, b.listed_to));
    s.complete_to = std::min(a.complete_to, b.complete_to);
    s.census.assign(s.complete_to + 1, 0);
    for (std::size_t n = 0; n <= s.complete_to; ++n) s.census[n] = a.count(n) + b.count(n);
    s.has_empty = a.has_empty || b.has_empty;
    return s;
}

// Above the golden ratio exactly when d < 1(0).
bool above_golden(const SymbolicSequence& d) {
    SeqComparison c = alt_compare_seq(d, SymbolicSequence::periodic({1}, {0}));
    if (!c.decided)
        throw Error(ErrorCode::UnknownAtHorizon, "d agrees with 1(0) on " + std::to_string(c.position) + " digits");
    return c.order < 0;
}

} // namespace

WordSet GammaFamilies::all() const { return unite(unite(gamma0, gamma0_prime), unite(gamma1, gamma1_prime)); }

GammaFamilies build_gamma(const SymbolicSequence& d, std::size_t max_len, std::size_t list_len) {
    Builder b(d, max_len, list_len);
    return {b.gamma0(), b.gamma0_prime(), b.gamma1(), b.gamma1_prime()};
}

WordSet build_delta_odd(const SymbolicSequence& d, std::size_t max_len, std::size_t list_len) {
    Builder b(d, max_len, list_len);
    return unite(b.delta0_odd(), b.delta1_odd());
}

WordSet build_delta_evn(const SymbolicSequence& d, std::size_t max_len) {
    Builder b(d, max_len, max_len);
    return b.delta_evn();
}

WordSet build_delta_i(std::size_t i, const SymbolicSequence& d, std::size_t max_len, std::size_t list_len) {
    if (i == 0) throw Error(ErrorCode::InvalidArgument, "Delta^(i) is indexed from 1");
    Builder b(d, max_len, list_len);
    return b.delta_level(i - 1);
}

std::vector<WordSet> build_delta_families(const SymbolicSequence& d, std::size_t max_len, std::size_t list_len) {
    Builder b(d, max_len, list_len);
    std::vector<WordSet> out;
    if (!b.has_blocks()) return out;
    for (std::size_t lev = 0; lev <= b.max_level(); ++lev) out.push_back(b.delta_level(lev));
    while (!out.empty() && out.back().min_length() == 0) out.pop_back();
    return out;
}

WordSet build_code_C(const SymbolicSequence& d, std::size_t max_len, std::size_t list_len) {
    if (!above_golden(d)) return single_zero(max_len, list_len);
    Builder b(d, max_len, list_len);
    WordSet gamma = unite(unite(b.gamma0(), b.gamma0_prime()), unite(b.gamma1(), b.gamma1_prime()));
    WordSet odd = unite(b.delta0_odd(), b.delta1_odd());
    const std::size_t N = max_len;
    const std::size_t M = b.list_len();

    // (1/(1 - A) - 1) G_{>=2} on censuses.
    std::vector<BigInt> star(N + 1, 0); // nonempty products of Delta_odd words
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            if (odd.count(k) != 0) star[n] += odd.count(k) * ((n == k) ? BigInt(1) : star[n - k]);
    std::vector<BigInt> c(N + 1, 0);
    for (std::size_t n = 0; n <= N; ++n) c[n] = gamma.count(n);
    for (std::size_t a = 1; a <= N; ++a)
        for (std::size_t g = 2; a + g <= N; ++g) c[a + g] += star[a] * gamma.count(g);

    std::vector<Word> ws = gamma.words;
    std::vector<Word> tails;
    for (const auto& y : gamma.words)
        if (y.size() >= 2) tails.push_back(y);
    std::function<void(const Word&)> rec = [&](const Word& x) {
        for (const auto& a : odd.words) {
            if (x.size() + a.size() + 2 > M) continue;
            Word xa = concat(x, a);
            for (const auto& y : tails)
                if (xa.size() + y.size() <= M) ws.push_back(concat(xa, y));
            rec(xa);
        }
    };
    rec({});
    WordSet s = WordSet::from_words(std::move(ws), M);
    s.census = std::move(c);
    s.complete_to = N;
    s.listed_to = M;
    return s;
}

WordSet build_code_C(const BetaSpec& beta, std::size_t max_len, std::size_t list_len, std::size_t horizon) {
    ReferencePair ref = reference_pair(beta, std::max(horizon, 2 * max_len + 2));
    if (!above_golden(ref.d)) return single_zero(max_len, list_len);
    return build_code_C(ref.d, max_len, list_len);
}

PrefixCheck is_prefix_code(const WordSet& s) {
    std::vector<Word> ws = s.words;
    std::sort(ws.begin(), ws.end());
    for (std::size_t i = 0; i + 1 < ws.size(); ++i)
        if (is_prefix(ws[i], ws[i + 1])) return {false, std::make_pair(ws[i], ws[i + 1])};
    if (s.has_empty && !ws.empty()) return {false, std::make_pair(Word{}, ws.front())};
    return {};
}

bool is_uniquely_decodable(const WordSet& s) {
    const std::set<Word> code(s.words.begin(), s.words.end());
    // {b' : a b' = b, a in A, b in B, b' nonempty}
    auto quotient = [](const std::set<Word>& a, const std::set<Word>& b) {
        std::set<Word> r;
        for (const auto& x : a)
            for (const auto& y : b)
                if (x.size() < y.size() && is_prefix(x, y)) r.emplace(y.begin() + static_cast<std::ptrdiff_t>(x.size()), y.end());
        return r;
    };
    std::set<Word> dangling = quotient(code, code);
    std::set<std::set<Word>> seen;
    while (!dangling.empty()) {
        for (const auto& w : dangling)
            if (code.count(w)) return false;
        if (!seen.insert(dangling).second) return true;
        std::set<Word> next = quotient(code, dangling);
        std::set<Word> more = quotient(dangling, code);
        next.insert(more.begin(), more.end());
        dangling = std::move(next);
    }
    return true;
}

RationalInterval kraft_sum(const WordSet& s, const BetaSpec& beta, std::size_t max_len) {
    const std::size_t n = std::min(max_len, s.complete_to);
    RationalInterval b = beta.enclose(Rational(1, 1000000000) * Rational(1, 1000000000));
    Rational lo = 0, hi = 0;
    Rational plo = 1, phi = 1; // bounds on beta^{-k}
    for (std::size_t k = 1; k <= n; ++k) {
        plo /= b.hi;
        phi /= b.lo;
        if (s.count(k) != 0) {
            lo += plo * s.count(k);
            hi += phi * s.count(k);
        }
    }
    if (s.has_empty) {
        lo += 1;
        hi += 1;
    }
    return {lo, hi};
}

SupportCode support_code(const ReferencePair& ref) {
    if (above_golden(ref.d)) return {SupportKind::CFull, 0};
    // d(l_{gamma_n}) = u_n (v_n); beta > gamma_n exactly when d < u_n (v_n).
    for (std::size_t n = 1;; ++n) {
        MorphismPair m = morphism_words(n);
        SeqComparison c = alt_compare_seq(ref.d, SymbolicSequence::periodic(m.u, m.v));
        if (!c.decided)
            throw Error(ErrorCode::UnknownAtHorizon,
                        "d(l_beta) agrees with d(l_gamma_" + std::to_string(n) + ") on " + std::to_string(c.position) +
                            " digits");
        if (c.order < 0) return n == 1 ? SupportCode{SupportKind::DeltaOdd, 0} : SupportCode{SupportKind::DeltaI, n - 1};
        if (m.u.size() > ref.d.known_length())
            throw Error(ErrorCode::UnknownAtHorizon, "beta too close to 1 for the available digits");
    }
}

SupportCode support_code(const BetaSpec& beta, std::size_t horizon) {
    return support_code(reference_pair(beta, horizon));
}

} // namespace negabeta
