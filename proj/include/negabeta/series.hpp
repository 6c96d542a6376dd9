#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "negabeta/expansion.hpp"
#include "negabeta/numerics.hpp"

namespace negabeta {

/// Truncated power series sum_{n <= N} c_n z^n with exact rational coefficients.
class IntSeries {
public:
    explicit IntSeries(std::size_t order) : c_(order + 1) {}
    IntSeries(std::vector<Rational> coeffs, std::size_t order);

    static IntSeries one(std::size_t order) { return monomial(0, 1, order); }
    static IntSeries monomial(std::size_t k, const Rational& c, std::size_t order);
    static IntSeries from_integers(const std::vector<long>& coeffs, std::size_t order);
    static IntSeries from_integers(const std::vector<BigInt>& coeffs, std::size_t order);
    /// 1/(1-z) = 1 + z + z^2 + ...
    static IntSeries geometric(std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return c_[n]; }
    Rational& operator[](std::size_t n) { return c_[n]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    IntSeries operator+(const IntSeries& o) const;
    IntSeries operator-(const IntSeries& o) const;
    IntSeries operator*(const IntSeries& o) const;
    IntSeries operator*(const Rational& r) const;
    IntSeries operator-() const;
    bool operator==(const IntSeries& o) const { return c_ == o.c_; }

    /// Requires c_0 = 1 (NonUnitConstantTerm otherwise).
    IntSeries reciprocal() const;
    IntSeries operator/(const IntSeries& o) const { return *this * o.reciprocal(); }
    /// Requires c_0 = 0.
    IntSeries exp() const;
    /// Requires c_0 = 1 (NonzeroConstantTermForLog otherwise).
    IntSeries log() const;
    IntSeries derivative() const;
    /// z f'(z) / f(z).
    IntSeries log_derivative() const;
    IntSeries truncate(std::size_t order) const;

    bool is_integral() const;
    /// Throws NonIntegerCoefficient.
    std::vector<BigInt> integers() const;
    std::vector<std::string> to_strings() const;

private:
    std::vector<Rational> c_;
};

IntSeries product(const std::vector<IntSeries>& factors, std::size_t order);

/// 1 - sum_{n=1}^{N} (d_{n-1} - d_n)(-z)^n with d_0 = 0.
IntSeries denominator_series(const SymbolicSequence& d, std::size_t order);

/// Census series sum b_n z^n of a length census (b_0 included as given).
IntSeries census_series(const std::vector<BigInt>& census, std::size_t order);

struct SeriesResult {
    IntSeries series;
    /// Coefficients are certified up to this order.
    std::size_t valid_to;
};

/// 1/((1-z) D*(z)), the lap-counting function.
SeriesResult lap_series(const ReferencePair& ref, std::size_t order);

/// Zeta function of the transformation: (1+z)/D(z) when d is not purely
/// periodic, (1+z)/((1-z^k) D*(z)) when d is purely periodic of period k.
/// A truncated d needs a certificate of aperiodicity or `assume_nonperiodic`.
SeriesResult zeta_transformation(const ReferencePair& ref, std::size_t order, bool assume_nonperiodic = false);

/// Zeta function of the shift: the transformation zeta divided by (1 - z^{p+1})
/// when d is purely periodic of odd period p, unchanged otherwise.
SeriesResult zeta_shift(const ReferencePair& ref, std::size_t order, bool assume_nonperiodic = false);

/// exp(sum_n p_n z^n / n); the counts are p_1..p_N. Throws NonIntegerCoefficient.
IntSeries zeta_from_counts(const std::vector<BigInt>& counts);

struct IdentityResidual {
    std::string name;
    bool applicable = true;
    /// Coefficients 0..order were compared.
    std::size_t order = 0;
    /// lhs - rhs, coefficientwise.
    std::vector<BigInt> residual;
    std::string note;

    BigInt max_abs() const;
    bool zero() const { return max_abs() == 0; }
};

struct IdentityReport {
    std::vector<IdentityResidual> items;
    bool all_zero() const;
    const IdentityResidual& at(const std::string& name) const;
};

/// Coefficientwise checks, each to its certified order:
///  kneading_factorization  D*(z) = (1+z)(1-C)(1-Dodd) prod_i (1-D^(i)) on code censuses
///  lap_census_factorization  1/(1-z) = the same product times the enumerated language census
///  ito_census  (1-z^{2p})/((1-z) D(z)) = Ito-Sadahiro census, d purely periodic of odd period 2p-1
///  zeta_lap  zeta = (1-z^2) L, or (1-z^k) zeta = (1-z^2) L for d purely periodic of period k
///  lap_complexity  L = factor complexity
///  zeta_periodic_points  z zeta'/zeta = brute-force periodic point counts, shift zeta likewise
/// Brute-force enumerations stop at `oracle_order`.
IdentityReport verify_identities(const BetaSpec& beta, std::size_t order, std::size_t oracle_order = 8,
                                 std::size_t horizon = 512);

} // namespace negabeta
