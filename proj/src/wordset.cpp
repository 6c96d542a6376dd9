#include "negabeta/wordset.hpp"

#include <algorithm>

namespace negabeta {

bool canonical_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

WordSet WordSet::from_words(std::vector<Word> words, std::size_t complete_to, bool has_empty) {
    WordSet s;
    std::sort(words.begin(), words.end(), canonical_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    s.words = std::move(words);
    s.complete_to = complete_to;
    s.listed_to = complete_to;
    s.has_empty = has_empty;
    s.census.assign(complete_to + 1, 0);
    if (has_empty) s.census[0] = 1;
    for (const auto& w : s.words)
        if (w.size() <= complete_to) s.census[w.size()] += 1;
    return s;
}

bool WordSet::contains(const Word& w) const {
    if (w.empty()) return has_empty;
    return std::binary_search(words.begin(), words.end(), w, canonical_less);
}

std::size_t WordSet::min_length() const {
    for (std::size_t n = 1; n < census.size(); ++n)
        if (census[n] != 0) return n;
    return 0;
}

} // namespace negabeta
