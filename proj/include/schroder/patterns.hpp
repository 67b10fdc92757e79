#pragma once

#include "schroder/core.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schroder {

/// A word pattern such as 021 or 2413. Letters may repeat; matching respects
/// equalities as well as strict order.
class Pattern {
public:
    explicit Pattern(std::vector<int> word);

    /// Parses a digit string, e.g. "2413".
    static Pattern parse(std::string_view digits);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    std::span<const int> word() const noexcept { return word_; }
    std::string to_string() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::vector<int> word_;
};

/// "2413,4213" -> {2413, 4213}. The empty string is the empty list.
std::vector<Pattern> parse_patterns(std::string_view text);
std::string patterns_to_string(std::span<const Pattern> patterns, char separator = ',');

bool contains(std::span<const int> word, const Pattern& pattern);
/// Only occurrences whose last letter is the last letter of `word`.
bool contains_ending_at_last(std::span<const int> word, const Pattern& pattern);
bool avoids_all(std::span<const int> word, std::span<const Pattern> patterns);

/// Positive entries weakly increasing; equivalent to avoiding 021 on inversion sequences.
bool avoids_021(const InversionSequence& e);

/// Visits S_n(patterns) in lexicographic order; `visit` returning false stops early.
void for_each_avoiding_permutation(int n, std::span<const Pattern> patterns,
                                   const std::function<bool(const Permutation&)>& visit);
void for_each_avoiding_inversion_sequence(int n, std::span<const Pattern> patterns,
                                          const std::function<bool(const InversionSequence&)>& visit);

/// Materialized enumerations in lexicographic order. With jobs > 1 the search
/// is split by first entry and the parts are concatenated in prefix order, so
/// the result does not depend on the worker count.
std::vector<Permutation> enumerate_avoiding_permutations(int n, std::span<const Pattern> patterns,
                                                         int jobs = 1);
std::vector<InversionSequence> enumerate_avoiding_inversion_sequences(int n,
                                                                      std::span<const Pattern> patterns,
                                                                      int jobs = 1);

/// I_n(021) generated directly from the weakly-increasing-positives form.
std::vector<InversionSequence> enumerate_021_avoiding(int n);

inline std::vector<Permutation> all_permutations(int n, int jobs = 1) {
    return enumerate_avoiding_permutations(n, {}, jobs);
}
inline std::vector<InversionSequence> all_inversion_sequences(int n, int jobs = 1) {
    return enumerate_avoiding_inversion_sequences(n, {}, jobs);
}

}  // namespace schroder
