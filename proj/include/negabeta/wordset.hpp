#pragma once

#include <cstddef>
#include <vector>

#include "negabeta/numerics.hpp"
#include "negabeta/order.hpp"

namespace negabeta {

/// A family of finite words with its length census b_n.
struct WordSet {
    /// Sorted by length, then lexicographically. Listed exhaustively up to `listed_to`.
    std::vector<Word> words;
    /// census[n] = number of members of length n, for n <= complete_to.
    std::vector<BigInt> census;
    std::size_t complete_to = 0;
    std::size_t listed_to = 0;
    /// Whether the empty word belongs to the family (never stored in `words`).
    bool has_empty = false;

    static WordSet from_words(std::vector<Word> words, std::size_t complete_to, bool has_empty = false);

    bool contains(const Word& w) const;
    std::size_t size() const { return words.size(); }
    BigInt count(std::size_t n) const { return n < census.size() ? census[n] : BigInt(0); }
    /// Smallest member length, or 0 when the family is empty up to complete_to.
    std::size_t min_length() const;
};

bool canonical_less(const Word& a, const Word& b);

} // namespace negabeta
