#pragma once

#include <cstddef>
#include <vector>

#include "negabeta/numerics.hpp"
#include "negabeta/order.hpp"

namespace negabeta {

struct OrbitPoint {
    FieldElement value;
    std::size_t index = 0;
};

struct Step {
    int digit;
    OrbitPoint next;
};

/// One application of T(x) = -beta x - floor(-beta x - l_beta); x must lie in I_beta.
Step t_step(const OrbitPoint& x);

bool in_unit_interval(const FieldElement& x);

struct Expansion {
    /// x = sum_{i >= -n+1} x_i (-beta)^{-i}; `seq` holds x_{-n+1}, x_{-n+2}, ...
    std::size_t integer_part_length = 0;
    SymbolicSequence seq;
    BetaSpec beta;
};

/// Digits of x. Periodicity is detected by exact equality of orbit points;
/// without a repeat within max_digits the result is truncated.
Expansion expand(const FieldElement& x, std::size_t max_digits);

/// The first n points of the orbit of x under T (x itself first).
std::vector<FieldElement> orbit(const FieldElement& x, std::size_t n);

/// Replace a purely periodic sequence of odd period (d_1..d_h) by the
/// periodic sequence (d_1..d_{h-1}, d_h - 1, 0). Other sequences are returned
/// unchanged unless `require_purely_periodic` is set.
SymbolicSequence corrected(const SymbolicSequence& d, bool require_purely_periodic = false);

/// Exact value of an eventually periodic expansion.
FieldElement evaluate_exact(const Expansion& e);

/// Enclosure of the value of e. Exact (zero width) when the value is rational
/// and the tail is periodic; truncated expansions cannot be tighter than the
/// unknown tail allows.
RationalInterval evaluate(const Expansion& e, const Rational& width);

struct ReferencePair {
    SymbolicSequence d;
    SymbolicSequence d_star;
    std::size_t horizon = 0;

    bool certified_periodic() const { return d.is_periodic(); }
    bool odd_periodic() const { return d.purely_periodic() && d.period().size() % 2 == 1; }
};

/// d = d(l_beta, -beta) and its corrected form d*.
ReferencePair reference_pair(const BetaSpec& beta, std::size_t max_digits);

} // namespace negabeta
