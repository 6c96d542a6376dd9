#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "negabeta/expansion.hpp"
#include "negabeta/wordset.hpp"

namespace negabeta {

/// u_0 = 1, v_0 = 00, u_n = u_{n-1} v_{n-1}, v_n = u_{n-1} u_{n-1}.
struct MorphismPair {
    std::size_t n = 0;
    Word u;
    Word v;
};

MorphismPair morphism_words(std::size_t n);
/// u_k for k >= -1, with u_{-1} = 0.
Word u_word(long k);
/// Prefix of the fixed point of psi(1) = 100, psi(0) = 1.
Word psi_prefix(std::size_t length);

/// Largest root of X^{l_n} - X - 1, l_n = max(|u_n|, |v_n|).
BetaSpec gamma_n(std::size_t n);
/// d(l_{gamma_n}) = u_n (v_n).
SymbolicSequence gamma_expansion(std::size_t n);

/// The n >= 0 with gamma_{n+1} <= beta < gamma_n. NotInRange when beta >= golden ratio.
std::size_t cascade_classify(const ReferencePair& ref);
std::size_t cascade_classify(const BetaSpec& beta, std::size_t horizon = 512);

struct CascadeParse {
    std::size_t n = 0;
    Word u;
    Word v;
    /// 'u' / 'v' factors, left to right.
    std::string factors;
    /// Maximal runs of equal factors.
    std::vector<std::pair<char, std::size_t>> runs;
    /// Digits consumed by whole factors.
    std::size_t parsed_length = 0;
};

/// Greedy factorization of d(l_beta) over {u_n, v_n}, n from cascade_classify,
/// over the first `horizon` digits. ParseFailure if neither factor fits.
CascadeParse decompose_expansion(const BetaSpec& beta, std::size_t horizon = 512);

struct GapInterval {
    std::size_t k = 0;
    std::size_t i = 0;
    /// Orbit indices t of the endpoints s_t = T^t(l_beta).
    std::size_t left_index = 0;
    std::size_t right_index = 0;
    FieldElement left;
    FieldElement right;
};

/// A_{k,i} = [s_{|u_k|+i}, s_{|u_k|+|u_{k-1}|+i}) for even i, endpoints swapped for odd i.
/// Requires 1 < beta < golden ratio, k <= n (cascade level) and i < |u_{k-1}|; IndexOutOfRange otherwise.
GapInterval gap_intervals(const BetaSpec& beta, std::size_t k, std::size_t i, std::size_t horizon = 512);
/// Every A_{k,i} of the cascade level of beta.
std::vector<GapInterval> all_gaps(const BetaSpec& beta, std::size_t horizon = 512);

/// u_k^4 and u_k u_{k+1} u_{k+2} for -1 <= k < n, together with
/// sigma^i(u_k) u_k^3 and sigma^i(u_k) u_{k+1} u_{k+2} for 0 < i < |u_k|.
WordSet forbidden_words(std::size_t n);

} // namespace negabeta
