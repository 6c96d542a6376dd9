#include "negabeta/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>

namespace negabeta {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotGreaterThanOne: return "NotGreaterThanOne";
    case ErrorCode::NoRootIsolated: return "NoRootIsolated";
    case ErrorCode::RootNotGreaterThanOne: return "RootNotGreaterThanOne";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::UndecidedAtHorizon: return "UndecidedAtHorizon";
    case ErrorCode::UnknownAtHorizon: return "UnknownAtHorizon";
    case ErrorCode::HorizonTooShort: return "HorizonTooShort";
    case ErrorCode::NotAnExpansionTail: return "NotAnExpansionTail";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NonzeroConstantTermForLog: return "NonzeroConstantTermForLog";
    case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::UnknownTail: return "UnknownTail";
    case ErrorCode::NotInRange: return "NotInRange";
    case ErrorCode::ParseFailure: return "ParseFailure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw Error(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'"); };
    if (text.empty()) fail();
    std::string s = text;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) fail();
    Rational out;
    auto all_digits = [](const std::string& t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        if (!all_digits(a) || !all_digits(b)) fail();
        BigInt den(b, 10);
        if (den == 0) fail();
        out = Rational(BigInt(a, 10), den);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string a = s.substr(0, dot), b = s.substr(dot + 1);
        if (a.empty()) a = "0";
        if (!all_digits(a) || (!b.empty() && !all_digits(b))) fail();
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, b.size());
        out = Rational(BigInt(a + b, 10), scale);
    } else {
        if (!all_digits(s)) fail();
        out = Rational(BigInt(s, 10));
    }
    out.canonicalize();
    return neg ? Rational(-out) : out;
}

std::string to_decimal(const Rational& x, int digits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(x) * scale;
    BigInt q = scaled.get_num() / scaled.get_den();
    if (2 * (scaled.get_num() - q * scaled.get_den()) >= scaled.get_den()) q += 1;
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (x < 0 && s != "0") s.insert(0, "-");
    return s;
}

namespace {

using Poly = std::vector<Rational>; // low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (deg(a) < deg(b)) return {{}, a};
    Poly q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    for (int k = deg(a) - deg(b); k >= 0; --k) {
        Rational c = a[static_cast<std::size_t>(k) + b.size() - 1] / lead;
        q[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(k) + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

Poly monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Poly derivative(const Poly& p) {
    Poly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long>(i));
    trim(r);
    return r;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Inverse of a modulo m, assuming gcd(a, m) = 1.
Poly inverse_mod(const Poly& a, const Poly& m) {
    Poly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
    trim(r1);
    while (deg(r1) > 0) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw Error(ErrorCode::Internal, "inverse of a non-unit");
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return divmod(s1, m).second;
}

std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain{f, derivative(f)};
    while (!chain.back().empty() && deg(chain.back()) > 0) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Distinct real roots of square-free f in the closed interval [lo, hi].
int count_roots(const Poly& f, const Rational& lo, const Rational& hi) {
    auto chain = sturm_chain(f);
    int n = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (eval(f, lo) == 0) ++n;
    return n;
}

// Interval enclosure of p over [lo, hi] by Horner's rule.
RationalInterval horner(const Poly& p, const RationalInterval& x) {
    RationalInterval acc{0, 0};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        Rational a = acc.lo * x.lo, b = acc.lo * x.hi, c = acc.hi * x.lo, d = acc.hi * x.hi;
        acc.lo = std::min({a, b, c, d}) + *it;
        acc.hi = std::max({a, b, c, d}) + *it;
    }
    return acc;
}

Poly to_poly(const std::vector<BigInt>& high_first) {
    Poly p;
    for (auto it = high_first.rbegin(); it != high_first.rend(); ++it) p.emplace_back(*it);
    trim(p);
    return p;
}

std::vector<BigInt> to_integer_coeffs(const Poly& p) {
    BigInt den = 1;
    for (const auto& c : p) {
        BigInt l;
        mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        den = l;
    }
    std::vector<BigInt> out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        Rational v = *it * den;
        out.push_back(v.get_num());
    }
    return out;
}

// Rational with the smallest denominator in [lo, hi], 0 < lo <= hi.
Rational simplest_between(const Rational& lo, const Rational& hi) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational r = simplest_between(1 / (hi - fl), 1 / (lo - fl));
    Rational out = Rational(fl) + 1 / r;
    out.canonicalize();
    return out;
}

// The root of square-free f in [lo, hi] when it is rational. A rational root
// p/q has q dividing the leading coefficient L, and once the interval is
// narrower than 1/L^2 it is the simplest rational in it.
std::optional<Rational> rational_root(const Poly& f, Rational lo, Rational hi) {
    std::vector<BigInt> c = to_integer_coeffs(f);
    BigInt lead = abs(c.front());
    Rational width(1, lead * lead * 2);
    int s_lo = sgn(eval(f, lo));
    if (s_lo == 0) return lo;
    if (eval(f, hi) == 0) return hi;
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        int s = sgn(eval(f, mid));
        if (s == 0) return mid;
        if (s == s_lo) lo = mid;
        else hi = mid;
    }
    if (lo <= 0) return std::nullopt;
    Rational r = simplest_between(lo, hi);
    if (eval(f, r) == 0) return r;
    return std::nullopt;
}

} // namespace

namespace detail {

struct BetaData {
    Poly minpoly; // monic, square-free
    bool rational = false;
    Rational value; // when rational
    int d1 = 0;
    Poly left, right; // l_beta and r_beta as elements

    mutable std::mutex mu;
    mutable RationalInterval iso; // isolating interval, only ever shrinks

    RationalInterval current() const {
        std::lock_guard lock(mu);
        return iso;
    }

    RationalInterval refine(const Rational& width) const {
        std::lock_guard lock(mu);
        if (rational) return iso;
        int s_lo = sgn(eval(minpoly, iso.lo));
        while (iso.width() > width) {
            Rational mid = iso.midpoint();
            int s = sgn(eval(minpoly, mid));
            if (s == 0) { // cannot happen for an irrational root; keep it honest anyway
                iso = {mid, mid};
                break;
            }
            if (s == s_lo) iso.lo = mid;
            else iso.hi = mid;
        }
        return iso;
    }
};

} // namespace detail

namespace {

std::shared_ptr<detail::BetaData> make_rational_data(const Rational& r) {
    auto data = std::make_shared<detail::BetaData>();
    data->rational = true;
    data->value = r;
    data->minpoly = {Rational(-r), Rational(1)};
    data->iso = {r, r};
    return data;
}

// Enclosure of p(beta) with width at most `width`.
RationalInterval enclose_poly(const detail::BetaData& data, const Poly& p, const Rational& width) {
    if (p.empty()) return {0, 0};
    if (p.size() == 1) return {p[0], p[0]};
    if (data.rational) {
        Rational v = eval(p, data.value);
        return {v, v};
    }
    RationalInterval x = data.current();
    Rational w = x.width();
    for (;;) {
        RationalInterval e = horner(p, x);
        if (e.width() <= width) return e;
        w /= 256;
        x = data.refine(w);
    }
}

} // namespace

BetaSpec beta_from_rational(const BigInt& p, const BigInt& q) {
    if (q == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    if (r <= 1) throw Error(ErrorCode::NotGreaterThanOne, "beta = " + r.get_str() + " is not > 1");
    auto data = make_rational_data(r);
    BigInt fl = r.get_num() / r.get_den();
    data->d1 = static_cast<int>(fl.get_si());
    data->left = {Rational(-r / (r + 1))};
    data->right = {Rational(1 / (r + 1))};
    return BetaSpec(data);
}

BetaSpec beta_from_poly(const std::vector<BigInt>& coeffs, const RationalInterval& interval) {
    Poly f = to_poly(coeffs);
    if (deg(f) < 1) throw Error(ErrorCode::NoRootIsolated, "constant polynomial");
    if (interval.lo > interval.hi) throw Error(ErrorCode::InvalidArgument, "empty interval");
    Poly g = gcd(f, derivative(f));
    if (deg(g) > 0) f = divmod(f, g).first;
    f = monic(f);

    int n = count_roots(f, interval.lo, interval.hi);
    if (n != 1) {
        throw Error(ErrorCode::NoRootIsolated, "interval [" + interval.lo.get_str() + ", " + interval.hi.get_str() +
                                                   "] contains " + std::to_string(n) + " real roots");
    }
    RationalInterval iso = interval;
    auto as_rational_root = [&](const Rational& r) {
        if (r <= 1) throw Error(ErrorCode::RootNotGreaterThanOne, "root " + r.get_str() + " is not > 1");
        return beta_from_rational(r);
    };
    if (deg(f) == 1) return as_rational_root(-f[0]);
    if (eval(f, iso.lo) == 0) return as_rational_root(iso.lo);
    if (eval(f, iso.hi) == 0) return as_rational_root(iso.hi);

    if (iso.lo <= 1 && iso.hi > 1) {
        Rational one = 1;
        int s1 = sgn(eval(f, one));
        if (s1 == 0) throw Error(ErrorCode::RootNotGreaterThanOne, "root is 1");
        if (s1 == sgn(eval(f, iso.lo))) iso.lo = one;
        else iso.hi = one;
    }
    if (iso.hi <= 1) throw Error(ErrorCode::RootNotGreaterThanOne, "isolated root is below 1");
    if (auto r = rational_root(f, iso.lo, iso.hi)) return as_rational_root(*r);

    auto data = std::make_shared<detail::BetaData>();
    data->minpoly = f;
    data->iso = iso;
    BetaSpec beta(data);
    data->d1 = static_cast<int>(fe_floor(beta.value()).get_si());
    FieldElement b = beta.value();
    data->left = (-b / (b + Rational(1))).coeffs();
    data->right = (beta.constant(1) / (b + Rational(1))).coeffs();
    return beta;
}

bool BetaSpec::is_rational() const { return data_->rational; }

const Rational& BetaSpec::rational_value() const {
    if (!data_->rational) throw Error(ErrorCode::InvalidArgument, "beta is not rational");
    return data_->value;
}

std::vector<BigInt> BetaSpec::polynomial() const { return to_integer_coeffs(data_->minpoly); }

int BetaSpec::degree() const { return deg(data_->minpoly); }

RationalInterval BetaSpec::enclose(const Rational& width) const { return data_->refine(width); }

int BetaSpec::d1() const { return data_->d1; }

FieldElement BetaSpec::value() const {
    if (data_->rational) return FieldElement(*this, data_->value);
    return FieldElement(*this, std::vector<Rational>{Rational(0), Rational(1)});
}

FieldElement BetaSpec::constant(const Rational& c) const { return FieldElement(*this, c); }

FieldElement BetaSpec::left() const { return FieldElement(*this, data_->left); }

FieldElement BetaSpec::right() const { return FieldElement(*this, data_->right); }

double BetaSpec::approx() const {
    auto iv = enclose(Rational(1, 1000000000) / 1000000000);
    return iv.midpoint().get_d();
}

std::string BetaSpec::describe() const {
    if (data_->rational) return data_->value.get_str();
    std::ostringstream os;
    auto c = polynomial();
    int d = static_cast<int>(c.size()) - 1;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i, --d) {
        if (c[i] == 0) continue;
        BigInt a = abs(c[i]);
        os << (c[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (a != 1 || d == 0) os << a.get_str();
        if (d > 0) os << "x";
        if (d > 1) os << "^" << d;
        first = false;
    }
    auto iv = data_->current();
    os << " on [" << iv.lo.get_str() << ", " << iv.hi.get_str() << "] ~ " << to_decimal(Rational(approx()), 12);
    return os.str();
}

FieldElement::FieldElement(const BetaSpec& beta, const Rational& c) : beta_(beta) {
    if (c != 0) c_.push_back(c);
}

FieldElement::FieldElement(const BetaSpec& beta, std::vector<Rational> c) : beta_(beta), c_(std::move(c)) {
    reduce();
}

void FieldElement::reduce() {
    trim(c_);
    const Poly& m = beta_.data_->minpoly;
    if (deg(c_) >= deg(m)) c_ = divmod(c_, m).second;
}

bool BetaSpec::same_field(const BetaSpec& other) const {
    if (data_ == other.data_) return true;
    if (data_->minpoly != other.data_->minpoly) return false;
    if (data_->rational) return true;
    RationalInterval a = data_->current(), b = other.data_->current();
    Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    return lo <= hi && count_roots(data_->minpoly, lo, hi) == 1;
}

namespace {
void check_same(const BetaSpec& a, const BetaSpec& b) {
    if (!a.same_field(b)) throw Error(ErrorCode::InvalidArgument, "field elements over different bases");
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(beta_, o.beta_);
    Poly r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return FieldElement(beta_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(beta_, o.beta_);
    return FieldElement(beta_, sub(c_, o.c_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(beta_, o.beta_);
    return FieldElement(beta_, mul(c_, o.c_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(beta_, o.beta_);
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    const Poly& m = beta_.data_->minpoly;
    Poly h = gcd(o.c_, m);
    // A common factor that does not vanish at beta can be divided out of the modulus.
    Poly mod = deg(h) > 0 ? divmod(m, h).first : m;
    Poly inv = inverse_mod(divmod(o.c_, mod).second, mod);
    return FieldElement(beta_, mul(c_, inv));
}

FieldElement FieldElement::operator-() const {
    Poly r = c_;
    for (auto& x : r) x = -x;
    return FieldElement(beta_, std::move(r));
}

FieldElement FieldElement::operator+(const Rational& r) const { return *this + FieldElement(beta_, r); }
FieldElement FieldElement::operator-(const Rational& r) const { return *this - FieldElement(beta_, r); }

FieldElement FieldElement::operator*(const Rational& r) const {
    Poly p = c_;
    for (auto& x : p) x *= r;
    return FieldElement(beta_, std::move(p));
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return FieldElement(beta_, Rational(1)) / pow(-e);
    FieldElement result(beta_, Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool FieldElement::is_zero() const {
    if (c_.empty()) return true;
    if (c_.size() == 1) return false;
    const auto& data = *beta_.data_;
    Poly h = gcd(c_, data.minpoly);
    if (deg(h) == 0) return false;
    // beta is a simple root of the modulus and the only one in the isolating
    // interval, so h vanishes at beta iff it changes sign across it.
    RationalInterval iv = data.current();
    return sgn(eval(h, iv.lo)) * sgn(eval(h, iv.hi)) < 0;
}

int FieldElement::sign() const {
    if (is_zero()) return 0;
    Rational w = 1;
    for (;;) {
        RationalInterval e = enclose_poly(*beta_.data_, c_, w);
        if (e.lo > 0) return 1;
        if (e.hi < 0) return -1;
        w /= 1024;
    }
}

std::size_t FieldElement::hash() const {
    std::size_t h = c_.size();
    auto mix = [&h](const mpz_class& z) {
        std::size_t n = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
        h = h * 31u + static_cast<std::size_t>(sgn(z) + 1);
    };
    for (const auto& c : c_) {
        mix(c.get_num());
        mix(c.get_den());
    }
    return h;
}

std::optional<Rational> FieldElement::as_rational() const {
    if (c_.empty()) return Rational(0);
    if (c_.size() == 1) return c_[0];
    return std::nullopt;
}

RationalInterval FieldElement::enclose(const Rational& width) const {
    return enclose_poly(*beta_.data_, c_, width);
}

double FieldElement::approx() const { return enclose(Rational(1, 1000000000) / 1000000000).midpoint().get_d(); }

std::string FieldElement::to_string() const {
    if (c_.empty()) return "0";
    if (beta_.is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].get_str() << ")";
        if (i >= 1) os << "*b";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

BigInt fe_floor(const FieldElement& x) {
    if (auto r = x.as_rational()) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), r->get_num_mpz_t(), r->get_den_mpz_t());
        return q;
    }
    RationalInterval e = x.enclose(Rational(1, 4));
    BigInt lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), e.lo.get_num_mpz_t(), e.lo.get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), e.hi.get_num_mpz_t(), e.hi.get_den_mpz_t());
    if (lo == hi) return lo;
    // An integer m = hi lies in (e.lo, e.hi]: decide x >= m exactly.
    return (x - Rational(hi)).sign() >= 0 ? hi : BigInt(hi - 1);
}

std::strong_ordering fe_compare(const FieldElement& x, const FieldElement& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare_bases(const BetaSpec& a, const BetaSpec& b) {
    if (a.is_rational() && b.is_rational()) return cmp(a.rational_value(), b.rational_value()) <=> 0;
    if (a.is_rational() != b.is_rational()) {
        const BetaSpec& alg = a.is_rational() ? b : a;
        const Rational& r = a.is_rational() ? a.rational_value() : b.rational_value();
        int s = (alg.value() - r).sign(); // sign of alg - r
        if (s == 0) return std::strong_ordering::equal;
        bool alg_bigger = s > 0;
        return (alg_bigger == !a.is_rational()) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    Poly fa = to_poly(a.polynomial()), fb = to_poly(b.polynomial());
    Poly h = gcd(fa, fb);
    auto root_of_h = [&h](const BetaSpec& x) {
        auto iv = x.enclose(Rational(1));
        return deg(h) > 0 && sgn(eval(h, iv.lo)) * sgn(eval(h, iv.hi)) < 0;
    };
    bool shared = root_of_h(a) && root_of_h(b);
    Rational w = 1;
    for (;;) {
        auto ia = a.enclose(w), ib = b.enclose(w);
        if (ia.hi < ib.lo) return std::strong_ordering::less;
        if (ib.hi < ia.lo) return std::strong_ordering::greater;
        if (shared) {
            Rational lo = std::min(ia.lo, ib.lo), hi = std::max(ia.hi, ib.hi);
            if (count_roots(monic(h), lo, hi) == 1) return std::strong_ordering::equal;
        }
        w /= 1024;
    }
}

} // namespace negabeta
