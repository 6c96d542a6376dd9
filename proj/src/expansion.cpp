#include "negabeta/expansion.hpp"

#include <algorithm>
#include <unordered_map>

namespace negabeta {

bool in_unit_interval(const FieldElement& x) {
    const BetaSpec& b = x.field();
    return fe_compare(b.left(), x) <= 0 && fe_compare(x, b.right()) < 0;
}

Step t_step(const OrbitPoint& x) {
    const BetaSpec& beta = x.value.field();
    FieldElement y = -(beta.value() * x.value);
    BigInt digit = fe_floor(y - beta.left());
    FieldElement next = y - Rational(digit);
    if (digit < 0 || digit > beta.d1()) throw Error(ErrorCode::Internal, "digit out of range; point outside I_beta");
    return {static_cast<int>(digit.get_si()), {next, x.index + 1}};
}

namespace {

// For beta = p/q with q > 1, a nonzero rational point whose numerator is
// prime to q has an orbit along which the q-adic valuation of the
// denominator strictly increases, so the orbit never repeats.
bool certifies_aperiodic(const FieldElement& x) {
    const BetaSpec& beta = x.field();
    if (!beta.is_rational() || beta.rational_value().get_den() == 1) return false;
    auto r = x.as_rational();
    if (!r || *r == 0) return false;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), r->get_num_mpz_t(), beta.rational_value().get_den_mpz_t());
    return g == 1;
}

} // namespace

Expansion expand(const FieldElement& x, std::size_t max_digits) {
    if (max_digits == 0) throw Error(ErrorCode::InvalidArgument, "max_digits must be positive");
    const BetaSpec& beta = x.field();
    FieldElement neg_beta = -beta.value();
    FieldElement y = x;
    std::size_t n = 0;
    while (!in_unit_interval(y)) {
        y = y / neg_beta;
        ++n;
    }

    std::unordered_map<FieldElement, std::size_t, FieldElementHash, FieldElementSameRep> seen;
    Word digits;
    OrbitPoint p{y, 0};
    bool aperiodic = false;
    while (digits.size() < max_digits) {
        if (auto it = seen.find(p.value); it != seen.end()) {
            std::size_t start = it->second;
            Word pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
            Word per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
            return {n, SymbolicSequence::periodic(pre, per), beta};
        }
        aperiodic = aperiodic || certifies_aperiodic(p.value);
        if (!aperiodic) seen.emplace(p.value, digits.size());
        Step s = t_step(p);
        digits.push_back(s.digit);
        p = s.next;
    }
    // One more lookup: the point after the last digit may close a cycle.
    if (auto it = seen.find(p.value); it != seen.end()) {
        std::size_t start = it->second;
        Word pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
        Word per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
        return {n, SymbolicSequence::periodic(pre, per), beta};
    }
    return {n, SymbolicSequence::truncated(digits, aperiodic), beta};
}

std::vector<FieldElement> orbit(const FieldElement& x, std::size_t n) {
    std::vector<FieldElement> out;
    OrbitPoint p{x, 0};
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(p.value);
        if (i + 1 < n) p = t_step(p).next;
    }
    return out;
}

SymbolicSequence corrected(const SymbolicSequence& d, bool require_purely_periodic) {
    if (d.purely_periodic() && d.period().size() % 2 == 1) {
        Word per = d.period();
        if (per.back() == 0) throw Error(ErrorCode::NotAnExpansionTail, "odd period ending in 0: " + d.to_string());
        per.back() -= 1;
        per.push_back(0);
        return SymbolicSequence::periodic({}, per);
    }
    if (require_purely_periodic && !d.purely_periodic())
        throw Error(ErrorCode::NotAnExpansionTail, d.to_string() + " is not purely periodic");
    return d;
}

namespace {

// sum_{i=1}^{k} w_i (-beta)^{-i}
FieldElement digit_sum(const Word& w, const FieldElement& inv) {
    const BetaSpec& beta = inv.field();
    FieldElement acc = beta.constant(0);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = (acc + Rational(*it)) * inv;
    return acc;
}

} // namespace

FieldElement evaluate_exact(const Expansion& e) {
    if (!e.seq.is_periodic()) throw Error(ErrorCode::UnknownTail, "exact value needs a periodic tail");
    const BetaSpec& beta = e.beta;
    FieldElement inv = beta.constant(1) / (-beta.value());
    const Word& pre = e.seq.prefix();
    const Word& per = e.seq.period();
    FieldElement head = digit_sum(pre, inv);
    FieldElement cycle = digit_sum(per, inv) / (beta.constant(1) - inv.pow(static_cast<long>(per.size())));
    FieldElement frac = head + inv.pow(static_cast<long>(pre.size())) * cycle;
    return frac * (-beta.value()).pow(static_cast<long>(e.integer_part_length));
}

RationalInterval evaluate(const Expansion& e, const Rational& width) {
    if (e.seq.is_periodic()) {
        FieldElement v = evaluate_exact(e);
        if (auto r = v.as_rational()) return {*r, *r};
        return v.enclose(width);
    }
    const BetaSpec& beta = e.beta;
    FieldElement neg_beta = -beta.value();
    FieldElement inv = beta.constant(1) / neg_beta;
    const Word& digits = e.seq.prefix();
    long n = static_cast<long>(e.integer_part_length);
    long k = static_cast<long>(digits.size());
    FieldElement head = digit_sum(digits, inv) * neg_beta.pow(n);
    // The unknown tail is (-beta)^{n-k} t with t in [l_beta, r_beta].
    FieldElement scale = neg_beta.pow(n - k);
    RationalInterval a = (scale * beta.left()).enclose(width / 4);
    RationalInterval b = (scale * beta.right()).enclose(width / 4);
    RationalInterval h = head.enclose(width / 4);
    return {h.lo + std::min(a.lo, b.lo), h.hi + std::max(a.hi, b.hi)};
}

ReferencePair reference_pair(const BetaSpec& beta, std::size_t max_digits) {
    Expansion e = expand(beta.left(), max_digits);
    ReferencePair rp;
    rp.d = e.seq;
    rp.d_star = corrected(e.seq);
    rp.horizon = max_digits;
    return rp;
}

} // namespace negabeta
