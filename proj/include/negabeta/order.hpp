#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "negabeta/error.hpp"

namespace negabeta {

using Word = std::vector<int>;

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

/// A one-sided digit sequence: a finite prefix followed either by a periodic
/// tail or by nothing known (truncated at a horizon).
class SymbolicSequence {
public:
    SymbolicSequence() = default;

    /// prefix · period^inf, canonicalized (minimal period, then minimal preperiod).
    static SymbolicSequence periodic(Word prefix, Word period);
    /// Known prefix only. `aperiodic` records a proof that no periodic tail exists.
    static SymbolicSequence truncated(Word prefix, bool aperiodic = false);

    bool is_periodic() const { return !period_.empty(); }
    bool purely_periodic() const { return is_periodic() && prefix_.empty(); }
    bool aperiodic_certified() const { return aperiodic_; }
    const Word& prefix() const { return prefix_; }
    const Word& period() const { return period_; }

    /// Number of digits available; kUnbounded when periodic.
    std::size_t known_length() const { return is_periodic() ? kUnbounded : prefix_.size(); }

    /// 1-based digit access; at(0) is 0 (the convention d_0 = 0).
    int at(std::size_t i) const;
    int operator[](std::size_t i) const { return at(i); }
    Word take(std::size_t n) const;

    /// The sequence with its first k digits removed.
    SymbolicSequence drop(std::size_t k) const;
    /// w followed by this sequence.
    SymbolicSequence prepend(const Word& w) const;

    int max_digit() const;

    bool operator==(const SymbolicSequence& o) const {
        return prefix_ == o.prefix_ && period_ == o.period_ && aperiodic_ == o.aperiodic_;
    }

    /// Digit-string syntax: `2012(1)`, `1,10,3(0)`; truncated sequences end in `...`.
    std::string to_string() const;

private:
    Word prefix_;
    Word period_;
    bool aperiodic_ = false;
};

/// Contiguous single digits when every digit is below 10, otherwise comma-separated.
std::string format_word(const Word& w);
Word parse_word(const std::string& text);
SymbolicSequence parse_sequence(const std::string& text);

/// Alternating order on words of equal length: at the first differing
/// position k (1-based), u < v iff (-1)^k (u_k - v_k) < 0.
std::strong_ordering alt_compare(const Word& u, const Word& v);
inline bool alt_less(const Word& u, const Word& v) { return alt_compare(u, v) < 0; }
inline bool alt_less_eq(const Word& u, const Word& v) { return alt_compare(u, v) <= 0; }

struct SeqComparison {
    std::strong_ordering order = std::strong_ordering::equal;
    /// False when the sequences agree on every digit compared but equality is not certified.
    bool decided = true;
    /// First differing position, or the number of digits compared when none differ.
    std::size_t position = 0;
};

/// Exact for two periodic sequences. Otherwise compares up to the shorter known
/// length (capped by `horizon`) and reports `decided = false` on a tie.
SeqComparison alt_compare_seq(const SymbolicSequence& x, const SymbolicSequence& y, std::size_t horizon = kUnbounded);

/// Like alt_compare_seq but throws UndecidedAtHorizon instead of returning an undecided tie.
std::strong_ordering alt_compare_seq_exact(const SymbolicSequence& x, const SymbolicSequence& y,
                                           std::size_t horizon = kUnbounded);

struct ConcatReport {
    std::strong_ordering u_v = std::strong_ordering::equal;
    std::strong_ordering uw_vw = std::strong_ordering::equal;
    std::strong_ordering wu_wv = std::strong_ordering::equal;
    bool append_preserves = true;
    /// wu, wv keep the order of u, v when |w| is even and reverse it when odd.
    bool prepend_parity_rule = true;
};

ConcatReport concat_order_check(const Word& u, const Word& v, const Word& w);

Word concat(const Word& a, const Word& b);
bool is_prefix(const Word& p, const Word& w);

} // namespace negabeta
