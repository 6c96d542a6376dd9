#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "negabeta/error.hpp"

namespace negabeta {

using BigInt = mpz_class;
using Rational = mpq_class;

struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

/// Parse "3", "-7/2" or "1.25" into an exact rational.
Rational parse_rational(const std::string& text);

/// Shortest-ish decimal rendering with `digits` significant decimals after the point.
std::string to_decimal(const Rational& x, int digits = 12);

namespace detail {
struct BetaData;
}

class FieldElement;

/// The base beta > 1, held exactly: a rational, or the unique root of an
/// integer polynomial inside an isolating interval.
class BetaSpec {
public:
    bool is_rational() const;
    /// Throws InvalidArgument for algebraic bases.
    const Rational& rational_value() const;

    /// Square-free defining polynomial, integer coefficients, highest degree first.
    /// For rational p/q this is q x - p.
    std::vector<BigInt> polynomial() const;
    int degree() const;

    /// Enclosure of beta of width at most `width` (refined on demand).
    RationalInterval enclose(const Rational& width) const;

    /// First digit of d(l_beta): floor(beta), which equals beta when beta is an integer.
    int d1() const;
    int alphabet_top() const { return d1(); }

    FieldElement value() const;
    FieldElement constant(const Rational& c) const;
    /// l_beta = -beta/(beta+1), left end of I_beta.
    FieldElement left() const;
    /// r_beta = 1/(beta+1), right end of I_beta.
    FieldElement right() const;

    double approx() const;
    std::string describe() const;

    /// True when both describe the same number (same defining polynomial, same root).
    bool same_field(const BetaSpec& other) const;

private:
    friend BetaSpec beta_from_rational(const BigInt&, const BigInt&);
    friend BetaSpec beta_from_poly(const std::vector<BigInt>&, const RationalInterval&);
    friend class FieldElement;
    explicit BetaSpec(std::shared_ptr<detail::BetaData> data) : data_(std::move(data)) {}

    std::shared_ptr<detail::BetaData> data_;
};

BetaSpec beta_from_rational(const BigInt& p, const BigInt& q);
inline BetaSpec beta_from_rational(const Rational& r) { return beta_from_rational(r.get_num(), r.get_den()); }

/// `coeffs` are highest degree first: {1, -1, -1} is x^2 - x - 1.
BetaSpec beta_from_poly(const std::vector<BigInt>& coeffs, const RationalInterval& interval);

/// Element of Q(beta): a rational polynomial in beta reduced modulo the defining polynomial.
class FieldElement {
public:
    FieldElement(const BetaSpec& beta, const Rational& c);

    const BetaSpec& field() const { return beta_; }
    /// Coefficients of 1, beta, beta^2, ... (trailing zeros trimmed).
    const std::vector<Rational>& coeffs() const { return c_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator+(const Rational& r) const;
    FieldElement operator-(const Rational& r) const;
    FieldElement operator*(const Rational& r) const;
    FieldElement pow(long e) const;

    bool is_zero() const;
    int sign() const;
    bool operator==(const FieldElement& o) const { return (*this - o).is_zero(); }

    /// Same value, same representation. Exact equality when the defining
    /// polynomial is irreducible; used for hashing.
    bool same_representation(const FieldElement& o) const { return c_ == o.c_; }
    std::size_t hash() const;

    std::optional<Rational> as_rational() const;
    RationalInterval enclose(const Rational& width) const;
    double approx() const;
    std::string to_string() const;

private:
    friend class BetaSpec;
    FieldElement(const BetaSpec& beta, std::vector<Rational> c);
    void reduce();

    BetaSpec beta_;
    std::vector<Rational> c_;
};

BigInt fe_floor(const FieldElement& x);
std::strong_ordering fe_compare(const FieldElement& x, const FieldElement& y);

struct FieldElementHash {
    std::size_t operator()(const FieldElement& x) const { return x.hash(); }
};
struct FieldElementSameRep {
    bool operator()(const FieldElement& a, const FieldElement& b) const { return a.same_representation(b); }
};

/// Compare two bases, possibly from different number fields, by interval refinement.
/// Equal bases are detected when both are rational or share a defining polynomial.
std::strong_ordering compare_bases(const BetaSpec& a, const BetaSpec& b);

} // namespace negabeta
