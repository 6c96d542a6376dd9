#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "negabeta/expansion.hpp"
#include "negabeta/wordset.hpp"

namespace negabeta {

enum class ShiftVariant {
    ItoSadahiro, // lower bound d, upper bound 0d*
    Corrected,   // lower bound d*, upper bound 0d*
};

enum class PeriodicTarget {
    Shift,          // d <= psi <= 0d* for every shift psi
    Transformation, // d <= psi < 0d* for every shift psi
};

inline constexpr std::size_t kDefaultHorizon = 512;

/// Admissibility test against precomputed reference sequences. Finite words
/// are checked suffix by suffix against prefixes of the bounds, ties allowed.
class Language {
public:
    Language(ReferencePair ref, ShiftVariant variant);
    Language(const BetaSpec& beta, ShiftVariant variant, std::size_t horizon = kDefaultHorizon);

    const ReferencePair& reference() const { return ref_; }
    ShiftVariant variant() const { return variant_; }
    int alphabet_top() const { return top_; }

    bool admits(const Word& w) const;
    /// All admissible words of length n, canonical order.
    std::vector<Word> words(std::size_t n) const;
    /// Number of admissible words of each length 0..n.
    std::vector<BigInt> census(std::size_t n) const;

    const SymbolicSequence& lower() const;
    const SymbolicSequence& upper() const { return upper_; }

private:
    template <typename Visit>
    void walk(std::size_t n, Visit&& visit) const;

    ReferencePair ref_;
    ShiftVariant variant_;
    SymbolicSequence upper_;
    int top_;
};

bool is_admissible_word(const Word& w, const BetaSpec& beta, ShiftVariant v);
WordSet enumerate_words(std::size_t n, const BetaSpec& beta, ShiftVariant v);

/// H_0..H_n from H_n = sum_{k=1}^{n} (-1)^k (d*_{k-1} - d*_k) H_{n-k} + 1.
std::vector<BigInt> factor_complexity(std::size_t n, const SymbolicSequence& d_star);

struct Witness {
    Word left;
    Word right;
    /// left followed by right: not admissible, and no admissible bridge u makes left u right admissible.
    Word word() const { return concat(left, right); }
};

struct Classification {
    bool s_coded = false;
    bool s_tilde_coded = false;
    bool transitive = false;
    std::optional<Witness> witness;
    std::optional<std::size_t> periodic_odd;
    /// For beta < golden ratio: d starts with 1 0^{2(i0-1)} 1.
    std::optional<std::size_t> i0;
};

Classification classify(const BetaSpec& beta, std::size_t horizon = kDefaultHorizon);
Classification classify(const ReferencePair& ref);

/// True when beta >= golden ratio, decided symbolically from d(l_beta) versus 1(0).
bool at_least_golden(const ReferencePair& ref);

/// Brute-force count of words w of length n all of whose rotations, repeated
/// forever, lie within the bounds for `target`.
BigInt count_periodic_points(std::size_t n, const ReferencePair& ref, PeriodicTarget target);
BigInt count_periodic_points(std::size_t n, const BetaSpec& beta, PeriodicTarget target,
                             std::size_t horizon = kDefaultHorizon);

} // namespace negabeta
