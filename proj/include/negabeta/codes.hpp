#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "negabeta/expansion.hpp"
#include "negabeta/wordset.hpp"

namespace negabeta {

/// One factor d_1..d_{2n-1} of the block factorization, followed by p digits
/// that repeat the start of d.
struct Block {
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t length() const { return 2 * n - 1; }
};

struct BlockStructure {
    std::vector<Block> blocks;
    /// Even positions up to this index were scanned.
    std::size_t scan_horizon = 0;
    /// d periodic and the scan covered the preperiod plus a full period.
    bool complete = false;
};

/// Scans even positions 2n with d_{2n} = d_1, skipping the span claimed by the previous block.
/// Throws HorizonTooShort when a truncated d is shorter than `horizon`.
BlockStructure block_structure(const SymbolicSequence& d, std::size_t horizon);

/// The family builders take d(l_beta) or any reference sequence; a purely
/// periodic d of odd period is replaced by d*. Censuses are exact up to
/// `max_len`; words are listed up to min(max_len, list_len).
/// A truncated d must be known to 2 max_len + 2 digits (HorizonTooShort).
inline constexpr std::size_t kListAll = static_cast<std::size_t>(-1);

struct GammaFamilies {
    WordSet gamma0;
    WordSet gamma0_prime;
    WordSet gamma1;
    WordSet gamma1_prime;
    /// The union Gamma.
    WordSet all() const;
};

GammaFamilies build_gamma(const SymbolicSequence& d, std::size_t max_len, std::size_t list_len = kListAll);
WordSet build_delta_odd(const SymbolicSequence& d, std::size_t max_len, std::size_t list_len = kListAll);
/// Listed exhaustively (no separate counting); the empty word is flagged through has_empty.
WordSet build_delta_evn(const SymbolicSequence& d, std::size_t max_len);
/// Delta^(i), i >= 1.
WordSet build_delta_i(std::size_t i, const SymbolicSequence& d, std::size_t max_len, std::size_t list_len = kListAll);
/// Delta^(1), Delta^(2), ... up to the last family with a word of length <= max_len.
std::vector<WordSet> build_delta_families(const SymbolicSequence& d, std::size_t max_len,
                                          std::size_t list_len = kListAll);

/// {0} when beta <= golden ratio; otherwise Gamma together with x y for x a
/// nonempty product of Delta_odd words and y in Gamma of length >= 2.
WordSet build_code_C(const BetaSpec& beta, std::size_t max_len, std::size_t list_len = kListAll,
                     std::size_t horizon = 0);
WordSet build_code_C(const SymbolicSequence& d, std::size_t max_len, std::size_t list_len = kListAll);

struct PrefixCheck {
    bool prefix_free = true;
    /// (u, w) with u a proper prefix of w.
    std::optional<std::pair<Word, Word>> counterexample;
    explicit operator bool() const { return prefix_free; }
};

/// Checks the listed words.
PrefixCheck is_prefix_code(const WordSet& s);

/// Sardinas-Patterson test on the listed words.
bool is_uniquely_decodable(const WordSet& s);

/// Enclosure of sum_{x in s, |x| <= max_len} beta^{-|x|}.
RationalInterval kraft_sum(const WordSet& s, const BetaSpec& beta, std::size_t max_len);

enum class SupportKind { CFull, DeltaOdd, DeltaI };

struct SupportCode {
    SupportKind kind;
    /// Level n for DeltaI.
    std::size_t n = 0;
};

/// CFull for beta > golden ratio, DeltaOdd on (gamma_1, gamma_0], DeltaI(n) on (gamma_{n+1}, gamma_n].
SupportCode support_code(const BetaSpec& beta, std::size_t horizon = 512);
SupportCode support_code(const ReferencePair& ref);

} // namespace negabeta
