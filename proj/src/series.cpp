#include "negabeta/series.hpp"

#include <algorithm>

#include "negabeta/codes.hpp"
#include "negabeta/language.hpp"

namespace negabeta {

IntSeries::IntSeries(std::vector<Rational> coeffs, std::size_t order) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
}

IntSeries IntSeries::monomial(std::size_t k, const Rational& c, std::size_t order) {
    IntSeries s(order);
    if (k <= order) s.c_[k] = c;
    return s;
}

IntSeries IntSeries::from_integers(const std::vector<long>& coeffs, std::size_t order) {
    IntSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) s.c_[i] = coeffs[i];
    return s;
}

IntSeries IntSeries::from_integers(const std::vector<BigInt>& coeffs, std::size_t order) {
    IntSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) s.c_[i] = Rational(coeffs[i]);
    return s;
}

IntSeries IntSeries::geometric(std::size_t order) {
    IntSeries s(order);
    for (auto& c : s.c_) c = 1;
    return s;
}

namespace {
void check_order(const IntSeries& a, const IntSeries& b) {
    if (a.order() != b.order()) throw Error(ErrorCode::InvalidArgument, "series of different orders");
}
} // namespace

IntSeries IntSeries::operator+(const IntSeries& o) const {
    check_order(*this, o);
    IntSeries r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

IntSeries IntSeries::operator-(const IntSeries& o) const {
    check_order(*this, o);
    IntSeries r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

IntSeries IntSeries::operator*(const IntSeries& o) const {
    check_order(*this, o);
    const std::size_t n = c_.size();
    IntSeries r(order());
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

IntSeries IntSeries::operator*(const Rational& k) const {
    IntSeries r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

IntSeries IntSeries::operator-() const { return *this * Rational(-1); }

IntSeries IntSeries::reciprocal() const {
    if (c_[0] != 1) throw Error(ErrorCode::NonUnitConstantTerm, "constant term is " + c_[0].get_str());
    IntSeries r(order());
    r.c_[0] = 1;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (c_[k] != 0) acc -= c_[k] * r.c_[n - k];
        r.c_[n] = acc;
    }
    return r;
}

IntSeries IntSeries::derivative() const {
    IntSeries r(order());
    for (std::size_t n = 1; n < c_.size(); ++n) r.c_[n - 1] = c_[n] * static_cast<long>(n);
    return r;
}

IntSeries IntSeries::exp() const {
    if (c_[0] != 0) throw Error(ErrorCode::InvalidArgument, "exp needs a zero constant term");
    // f = exp(g): n f_n = sum_{k=1}^{n} k g_k f_{n-k}
    IntSeries f(order());
    f.c_[0] = 1;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            if (c_[k] != 0) acc += c_[k] * static_cast<long>(k) * f.c_[n - k];
        f.c_[n] = acc / static_cast<long>(n);
    }
    return f;
}

IntSeries IntSeries::log() const {
    if (c_[0] != 1) throw Error(ErrorCode::NonzeroConstantTermForLog, "log needs constant term 1, got " + c_[0].get_str());
    IntSeries q = derivative() * reciprocal(); // f'/f
    IntSeries r(order());
    for (std::size_t n = 1; n < c_.size(); ++n) r.c_[n] = q.c_[n - 1] / static_cast<long>(n);
    return r;
}

IntSeries IntSeries::log_derivative() const {
    IntSeries q = derivative() * reciprocal();
    IntSeries r(order());
    for (std::size_t n = 1; n < c_.size(); ++n) r.c_[n] = q.c_[n - 1];
    return r;
}

IntSeries IntSeries::truncate(std::size_t order) const {
    return IntSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order + 1, c_.size()))), order);
}

bool IntSeries::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<BigInt> IntSeries::integers() const {
    std::vector<BigInt> out;
    for (std::size_t n = 0; n < c_.size(); ++n) {
        if (c_[n].get_den() != 1)
            throw Error(ErrorCode::NonIntegerCoefficient, "coefficient " + std::to_string(n) + " is " + c_[n].get_str());
        out.push_back(c_[n].get_num());
    }
    return out;
}

std::vector<std::string> IntSeries::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : c_) out.push_back(c.get_str());
    return out;
}

IntSeries product(const std::vector<IntSeries>& factors, std::size_t order) {
    IntSeries r = IntSeries::one(order);
    for (const auto& f : factors) r = r * f.truncate(order);
    return r;
}

IntSeries denominator_series(const SymbolicSequence& d, std::size_t order) {
    IntSeries s(order);
    s[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        long c = d.at(n - 1) - d.at(n);
        // -(d_{n-1} - d_n)(-1)^n
        s[n] = (n % 2 == 0) ? -c : c;
    }
    return s;
}

IntSeries census_series(const std::vector<BigInt>& census, std::size_t order) {
    return IntSeries::from_integers(census, order);
}

namespace {

std::size_t certified_order(const SymbolicSequence& d, std::size_t order) {
    if (d.is_periodic()) return order;
    return std::min(order, d.known_length());
}

} // namespace

SeriesResult lap_series(const ReferencePair& ref, std::size_t order) {
    std::size_t n = certified_order(ref.d_star, order);
    IntSeries one_minus_z = IntSeries::one(n) - IntSeries::monomial(1, 1, n);
    IntSeries s = (one_minus_z * denominator_series(ref.d_star, n)).reciprocal();
    return {s, n};
}

SeriesResult zeta_transformation(const ReferencePair& ref, std::size_t order, bool assume_nonperiodic) {
    if (!ref.d.is_periodic() && !ref.d.aperiodic_certified() && !assume_nonperiodic) {
        throw Error(ErrorCode::UnknownTail,
                    "d(l_beta) is truncated at " + std::to_string(ref.d.known_length()) + " digits without an aperiodicity proof");
    }
    std::size_t n = certified_order(ref.d, order);
    IntSeries num = IntSeries::one(n) + IntSeries::monomial(1, 1, n);
    if (ref.d.purely_periodic()) {
        std::size_t k = ref.d.period().size();
        IntSeries den = (IntSeries::one(n) - IntSeries::monomial(k, 1, n)) * denominator_series(ref.d_star, n);
        return {num * den.reciprocal(), n};
    }
    return {num * denominator_series(ref.d, n).reciprocal(), n};
}

SeriesResult zeta_shift(const ReferencePair& ref, std::size_t order, bool assume_nonperiodic) {
    SeriesResult z = zeta_transformation(ref, order, assume_nonperiodic);
    if (!ref.odd_periodic()) return z;
    std::size_t p = ref.d.period().size();
    IntSeries f = IntSeries::one(z.valid_to) - IntSeries::monomial(p + 1, 1, z.valid_to);
    return {z.series * f.reciprocal(), z.valid_to};
}

IntSeries zeta_from_counts(const std::vector<BigInt>& counts) {
    const std::size_t n = counts.size();
    IntSeries g(n);
    for (std::size_t k = 1; k <= n; ++k) {
        g[k] = Rational(counts[k - 1], BigInt(static_cast<unsigned long>(k)));
        g[k].canonicalize();
    }
    IntSeries z = g.exp();
    z.integers();
    return z;
}

BigInt IdentityResidual::max_abs() const {
    BigInt m = 0;
    for (const auto& r : residual) m = std::max(m, BigInt(abs(r)));
    return m;
}

bool IdentityReport::all_zero() const {
    return std::all_of(items.begin(), items.end(), [](const IdentityResidual& r) { return !r.applicable || r.zero(); });
}

const IdentityResidual& IdentityReport::at(const std::string& name) const {
    for (const auto& r : items)
        if (r.name == name) return r;
    throw Error(ErrorCode::InvalidArgument, "no identity named " + name);
}

namespace {

IdentityResidual compare(std::string name, const IntSeries& lhs, const IntSeries& rhs, std::size_t order) {
    IdentityResidual r;
    r.name = std::move(name);
    r.order = order;
    for (std::size_t n = 0; n <= order; ++n) {
        Rational x = lhs[n] - rhs[n];
        if (x.get_den() != 1) throw Error(ErrorCode::NonIntegerCoefficient, r.name + " residual is not integral");
        r.residual.push_back(x.get_num());
    }
    return r;
}

IdentityResidual skipped(std::string name, std::string why) {
    IdentityResidual r;
    r.name = std::move(name);
    r.applicable = false;
    r.note = std::move(why);
    return r;
}

IntSeries one_minus(const WordSet& s, std::size_t order) {
    IntSeries f = IntSeries::one(order);
    for (std::size_t n = 1; n <= order; ++n) f[n] -= Rational(s.count(n));
    return f;
}

} // namespace

IdentityReport verify_identities(const BetaSpec& beta, std::size_t order, std::size_t oracle_order, std::size_t horizon) {
    ReferencePair ref = reference_pair(beta, std::max(horizon, 2 * order + 2));
    IdentityReport rep;

    std::size_t n = order;
    if (!ref.d.is_periodic()) n = std::min(n, (ref.d.known_length() - 2) / 2);
    const std::size_t m = std::min(n, oracle_order);
    const std::size_t list = 0;

    // Code factorization of the kneading denominator.
    WordSet c = build_code_C(ref.d, n, list);
    WordSet odd = build_delta_odd(ref.d, n, list);
    std::vector<IntSeries> factors{IntSeries::one(n) + IntSeries::monomial(1, 1, n), one_minus(c, n), one_minus(odd, n)};
    for (const auto& di : build_delta_families(ref.d, n, list)) factors.push_back(one_minus(di, n));
    IntSeries prod = product(factors, n);
    rep.items.push_back(compare("kneading_factorization", denominator_series(ref.d_star, n), prod, n));

    Language corrected_lang(ref, ShiftVariant::Corrected);
    std::vector<BigInt> census = corrected_lang.census(m);
    rep.items.push_back(compare("lap_census_factorization", IntSeries::geometric(m),
                                prod.truncate(m) * census_series(census, m), m));

    if (ref.odd_periodic()) {
        const std::size_t p2 = ref.d.period().size() + 1; // 2p
        IntSeries lhs = (IntSeries::one(m) - IntSeries::monomial(p2, 1, m)) * IntSeries::geometric(m) /
                        denominator_series(ref.d, m);
        Language ito(ref, ShiftVariant::ItoSadahiro);
        rep.items.push_back(compare("ito_census", lhs, census_series(ito.census(m), m), m));
    } else {
        rep.items.push_back(skipped("ito_census", "d(l_beta) is not purely periodic with odd period"));
    }

    SeriesResult lap = lap_series(ref, n);
    rep.items.push_back(compare("lap_complexity", lap.series, census_series(factor_complexity(lap.valid_to, ref.d_star), lap.valid_to),
                                lap.valid_to));

    if (!ref.d.is_periodic() && !ref.d.aperiodic_certified()) {
        rep.items.push_back(skipped("zeta_lap", "periodicity of d(l_beta) undecided at the horizon"));
        rep.items.push_back(skipped("zeta_periodic_points", "periodicity of d(l_beta) undecided at the horizon"));
        return rep;
    }
    SeriesResult z = zeta_transformation(ref, n);
    const std::size_t zn = std::min(z.valid_to, lap.valid_to);
    IntSeries lhs = z.series.truncate(zn);
    if (ref.d.purely_periodic())
        lhs = lhs * (IntSeries::one(zn) - IntSeries::monomial(ref.d.period().size(), 1, zn));
    IntSeries rhs = (IntSeries::one(zn) - IntSeries::monomial(2, 1, zn)) * lap.series.truncate(zn);
    rep.items.push_back(compare("zeta_lap", lhs, rhs, zn));

    const std::size_t pm = std::min(m, zn);
    IntSeries counts(pm);
    IntSeries shift_counts(pm);
    for (std::size_t k = 1; k <= pm; ++k) {
        counts[k] = Rational(count_periodic_points(k, ref, PeriodicTarget::Transformation));
        shift_counts[k] = Rational(count_periodic_points(k, ref, PeriodicTarget::Shift));
    }
    IdentityResidual t = compare("zeta_periodic_points", z.series.truncate(pm).log_derivative(), counts, pm);
    IdentityResidual s = compare("zeta_periodic_points", zeta_shift(ref, pm).series.log_derivative(), shift_counts, pm);
    for (std::size_t k = 0; k <= pm; ++k)
        if (t.residual[k] == 0) t.residual[k] = s.residual[k];
    t.note = "transformation and shift counts";
    rep.items.push_back(t);
    return rep;
}

} // namespace negabeta
