#include "negabeta/gaps.hpp"

#include "negabeta/language.hpp"

namespace negabeta {

MorphismPair morphism_words(std::size_t n) {
    MorphismPair m{0, {1}, {0, 0}};
    for (; m.n < n; ++m.n) {
        Word u = concat(m.u, m.v);
        m.v = concat(m.u, m.u);
        m.u = std::move(u);
    }
    return m;
}

Word u_word(long k) {
    if (k < -1) throw Error(ErrorCode::IndexOutOfRange, "u_k needs k >= -1");
    if (k == -1) return {0};
    return morphism_words(static_cast<std::size_t>(k)).u;
}

Word psi_prefix(std::size_t length) {
    Word w{1};
    while (w.size() < length) {
        Word next;
        for (int a : w) {
            if (a == 1) next.insert(next.end(), {1, 0, 0});
            else next.push_back(1);
        }
        w = std::move(next);
    }
    w.resize(length);
    return w;
}

BetaSpec gamma_n(std::size_t n) {
    MorphismPair m = morphism_words(n);
    const std::size_t l = std::max(m.u.size(), m.v.size());
    std::vector<BigInt> c(l + 1, 0);
    c[0] = 1;
    c[l - 1] = -1;
    c[l] = -1;
    // X^l - X - 1 has a single positive root, and it lies in (1, 2).
    return beta_from_poly(c, {Rational(1), Rational(2)});
}

SymbolicSequence gamma_expansion(std::size_t n) {
    MorphismPair m = morphism_words(n);
    return SymbolicSequence::periodic(m.u, m.v);
}

std::size_t cascade_classify(const ReferencePair& ref) {
    if (at_least_golden(ref)) throw Error(ErrorCode::NotInRange, "beta is not below the golden ratio");
    // beta -> d(l_beta) is decreasing, so beta >= gamma_{n+1} iff d <= u_{n+1} (v_{n+1}).
    for (std::size_t n = 0;; ++n) {
        SymbolicSequence g = gamma_expansion(n + 1);
        SeqComparison c = alt_compare_seq(ref.d, g);
        if (!c.decided)
            throw Error(ErrorCode::UnknownAtHorizon, "d(l_beta) agrees with d(l_gamma_" + std::to_string(n + 1) +
                                                         ") on " + std::to_string(c.position) + " digits");
        if (c.order <= 0) return n;
    }
}

std::size_t cascade_classify(const BetaSpec& beta, std::size_t horizon) {
    return cascade_classify(reference_pair(beta, horizon));
}

CascadeParse decompose_expansion(const BetaSpec& beta, std::size_t horizon) {
    ReferencePair ref = reference_pair(beta, horizon);
    CascadeParse out;
    out.n = cascade_classify(ref);
    MorphismPair m = morphism_words(out.n);
    out.u = m.u;
    out.v = m.v;
    const Word d = ref.d.take(std::min(horizon, ref.d.known_length()));
    auto fits = [&](const Word& f, std::size_t pos) {
        if (pos + f.size() > d.size()) return false;
        return std::equal(f.begin(), f.end(), d.begin() + static_cast<std::ptrdiff_t>(pos));
    };
    auto partial = [&](const Word& f, std::size_t pos) {
        return std::equal(d.begin() + static_cast<std::ptrdiff_t>(pos), d.end(), f.begin());
    };
    std::size_t pos = 0;
    while (pos < d.size()) {
        char f;
        if (fits(m.u, pos)) f = 'u';
        else if (fits(m.v, pos)) f = 'v';
        else if (d.size() - pos < std::max(m.u.size(), m.v.size()) && (partial(m.u, pos) || partial(m.v, pos))) break;
        else
            throw Error(ErrorCode::ParseFailure, "no factor u_" + std::to_string(out.n) + " or v_" +
                                                     std::to_string(out.n) + " at digit " + std::to_string(pos + 1));
        out.factors.push_back(f);
        if (!out.runs.empty() && out.runs.back().first == f) ++out.runs.back().second;
        else out.runs.emplace_back(f, 1);
        pos += f == 'u' ? m.u.size() : m.v.size();
    }
    out.parsed_length = pos;
    return out;
}

GapInterval gap_intervals(const BetaSpec& beta, std::size_t k, std::size_t i, std::size_t horizon) {
    std::size_t n = cascade_classify(beta, horizon);
    if (k > n) throw Error(ErrorCode::IndexOutOfRange, "k = " + std::to_string(k) + " exceeds level " + std::to_string(n));
    const std::size_t uk = u_word(static_cast<long>(k)).size();
    const std::size_t uk1 = u_word(static_cast<long>(k) - 1).size();
    if (i >= uk1)
        throw Error(ErrorCode::IndexOutOfRange, "i = " + std::to_string(i) + " must be below |u_{k-1}| = " + std::to_string(uk1));
    const std::size_t a = uk + i;
    const std::size_t b = uk + uk1 + i;
    std::vector<FieldElement> s = orbit(beta.left(), b + 1);
    GapInterval g{k, i, a, b, s[a], s[b]};
    if (i % 2 == 1) {
        std::swap(g.left_index, g.right_index);
        std::swap(g.left, g.right);
    }
    if (fe_compare(g.left, g.right) >= 0)
        throw Error(ErrorCode::Internal, "gap endpoints out of order at k = " + std::to_string(k) + ", i = " + std::to_string(i));
    return g;
}

std::vector<GapInterval> all_gaps(const BetaSpec& beta, std::size_t horizon) {
    std::size_t n = cascade_classify(beta, horizon);
    std::vector<GapInterval> out;
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t uk1 = u_word(static_cast<long>(k) - 1).size();
        for (std::size_t i = 0; i < uk1; ++i) out.push_back(gap_intervals(beta, k, i, horizon));
    }
    return out;
}

WordSet forbidden_words(std::size_t n) {
    std::vector<Word> ws;
    std::size_t longest = 0;
    for (long k = -1; k < static_cast<long>(n); ++k) {
        const Word u = u_word(k);
        const Word tail4 = concat(concat(u, u), concat(u, u));
        const Word chain = concat(u_word(k + 1), u_word(k + 2));
        for (std::size_t i = 0; i < u.size(); ++i) {
            Word head(u.begin() + static_cast<std::ptrdiff_t>(i), u.end());
            Word a = i == 0 ? tail4 : concat(head, concat(u, concat(u, u)));
            Word b = concat(head, chain);
            longest = std::max({longest, a.size(), b.size()});
            ws.push_back(std::move(a));
            ws.push_back(std::move(b));
        }
    }
    return WordSet::from_words(std::move(ws), longest);
}

} // namespace negabeta
