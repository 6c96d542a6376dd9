#include "negabeta/order.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace negabeta {

namespace {

Word minimal_period(const Word& p) {
    const std::size_t n = p.size();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool ok = true;
        for (std::size_t i = len; i < n && ok; ++i) ok = p[i] == p[i - len];
        if (ok) return Word(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(len));
    }
    return p;
}

std::strong_ordering by_parity(std::size_t k, int a, int b) {
    // k is 1-based; odd positions reverse the natural order.
    bool less = (k % 2 == 0) ? a < b : a > b;
    return less ? std::strong_ordering::less : std::strong_ordering::greater;
}

} // namespace

SymbolicSequence SymbolicSequence::periodic(Word prefix, Word period) {
    if (period.empty()) throw Error(ErrorCode::InvalidArgument, "empty period");
    SymbolicSequence s;
    period = minimal_period(period);
    while (!prefix.empty() && prefix.back() == period.back()) {
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
        prefix.pop_back();
    }
    s.prefix_ = std::move(prefix);
    s.period_ = std::move(period);
    return s;
}

SymbolicSequence SymbolicSequence::truncated(Word prefix, bool aperiodic) {
    SymbolicSequence s;
    s.prefix_ = std::move(prefix);
    s.aperiodic_ = aperiodic;
    return s;
}

int SymbolicSequence::at(std::size_t i) const {
    if (i == 0) return 0;
    --i;
    if (i < prefix_.size()) return prefix_[i];
    if (period_.empty()) {
        throw Error(ErrorCode::HorizonTooShort,
                    "digit " + std::to_string(i + 1) + " requested, " + std::to_string(prefix_.size()) + " known");
    }
    return period_[(i - prefix_.size()) % period_.size()];
}

Word SymbolicSequence::take(std::size_t n) const {
    Word w;
    w.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) w.push_back(at(i));
    return w;
}

SymbolicSequence SymbolicSequence::drop(std::size_t k) const {
    if (!is_periodic()) {
        if (k > prefix_.size()) throw Error(ErrorCode::HorizonTooShort, "drop beyond known prefix");
        return truncated(Word(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()), aperiodic_);
    }
    if (k <= prefix_.size()) return periodic(Word(prefix_.begin() + static_cast<std::ptrdiff_t>(k), prefix_.end()), period_);
    Word per = period_;
    std::size_t r = (k - prefix_.size()) % per.size();
    std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(r), per.end());
    return periodic({}, per);
}

SymbolicSequence SymbolicSequence::prepend(const Word& w) const {
    Word p = concat(w, prefix_);
    return is_periodic() ? periodic(p, period_) : truncated(p, aperiodic_);
}

int SymbolicSequence::max_digit() const {
    int m = 0;
    for (int d : prefix_) m = std::max(m, d);
    for (int d : period_) m = std::max(m, d);
    return m;
}

std::string SymbolicSequence::to_string() const {
    bool wide = max_digit() >= 10;
    auto part = [&](const Word& w) {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (wide && i > 0) s += ',';
            s += std::to_string(w[i]);
        }
        return s;
    };
    std::string s = part(prefix_);
    if (is_periodic()) {
        if (wide && !prefix_.empty()) s += ',';
        s += "(" + part(period_) + ")";
    } else {
        s += "...";
    }
    return s;
}

std::string format_word(const Word& w) {
    bool wide = std::any_of(w.begin(), w.end(), [](int d) { return d >= 10; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

namespace {

Word parse_digits(const std::string& text, bool comma) {
    Word w;
    if (comma) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw Error(ErrorCode::InvalidArgument, "bad digit '" + item + "'");
            w.push_back(std::stoi(item));
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(ErrorCode::InvalidArgument, std::string("bad digit '") + c + "'");
            w.push_back(c - '0');
        }
    }
    return w;
}

} // namespace

Word parse_word(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return parse_digits(t, t.find(',') != std::string::npos);
}

SymbolicSequence parse_sequence(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    bool comma = t.find(',') != std::string::npos;
    if (t.size() >= 3 && t.compare(t.size() - 3, 3, "...") == 0) {
        return SymbolicSequence::truncated(parse_digits(t.substr(0, t.size() - 3), comma));
    }
    auto open = t.find('(');
    if (open == std::string::npos) return SymbolicSequence::truncated(parse_digits(t, comma));
    if (t.back() != ')' || t.find('(', open + 1) != std::string::npos)
        throw Error(ErrorCode::InvalidArgument, "malformed periodic tail in '" + text + "'");
    Word pre = parse_digits(t.substr(0, open), comma);
    Word per = parse_digits(t.substr(open + 1, t.size() - open - 2), comma);
    if (per.empty()) throw Error(ErrorCode::InvalidArgument, "empty period in '" + text + "'");
    return SymbolicSequence::periodic(pre, per);
}

std::strong_ordering alt_compare(const Word& u, const Word& v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "cannot compare words of lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
    for (std::size_t k = 0; k < u.size(); ++k)
        if (u[k] != v[k]) return by_parity(k + 1, u[k], v[k]);
    return std::strong_ordering::equal;
}

SeqComparison alt_compare_seq(const SymbolicSequence& x, const SymbolicSequence& y, std::size_t horizon) {
    std::size_t limit;
    bool exact = x.is_periodic() && y.is_periodic();
    if (exact) {
        limit = std::max(x.prefix().size(), y.prefix().size()) + std::lcm(x.period().size(), y.period().size());
    } else {
        limit = std::min(x.known_length(), y.known_length());
    }
    if (horizon < limit) {
        limit = horizon;
        exact = false;
    }
    for (std::size_t k = 1; k <= limit; ++k) {
        int a = x.at(k), b = y.at(k);
        if (a != b) return {by_parity(k, a, b), true, k};
    }
    return {std::strong_ordering::equal, exact, limit};
}

std::strong_ordering alt_compare_seq_exact(const SymbolicSequence& x, const SymbolicSequence& y, std::size_t horizon) {
    SeqComparison c = alt_compare_seq(x, y, horizon);
    if (!c.decided) {
        throw Error(ErrorCode::UndecidedAtHorizon,
                    x.to_string() + " and " + y.to_string() + " agree on the first " + std::to_string(c.position) + " digits");
    }
    return c.order;
}

ConcatReport concat_order_check(const Word& u, const Word& v, const Word& w) {
    ConcatReport r;
    r.u_v = alt_compare(u, v);
    r.uw_vw = alt_compare(concat(u, w), concat(v, w));
    r.wu_wv = alt_compare(concat(w, u), concat(w, v));
    r.append_preserves = r.uw_vw == r.u_v;
    std::strong_ordering expected = r.u_v;
    if (w.size() % 2 == 1) expected = 0 <=> r.u_v;
    r.prepend_parity_rule = r.wu_wv == expected;
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

} // namespace negabeta
