#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace schroder {

/// Raised when a word does not satisfy the invariants of the object it is
/// meant to become.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an algorithm reaches a state its construction rules out.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A permutation of [n] in one-line notation. Positions and values are 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    bool empty() const noexcept { return word_.empty(); }

    /// Value at 1-based position.
    int at(int position) const { return word_.at(static_cast<std::size_t>(position - 1)); }
    std::span<const int> word() const noexcept { return word_; }

    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
    friend Permutation make_permutation_unchecked(std::vector<int> word);

    std::vector<int> word_;
};

/// A word e_1..e_n with 0 <= e_i <= i-1. Positions are 1-based.
class InversionSequence {
public:
    InversionSequence() = default;
    explicit InversionSequence(std::vector<int> word);

    static InversionSequence zeros(int n);

    int size() const noexcept { return static_cast<int>(word_.size()); }
    bool empty() const noexcept { return word_.empty(); }

    int at(int position) const { return word_.at(static_cast<std::size_t>(position - 1)); }
    std::span<const int> word() const noexcept { return word_; }

    std::string to_string() const;

    friend auto operator<=>(const InversionSequence&, const InversionSequence&) = default;

private:
    struct Unchecked {};
    InversionSequence(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
    friend InversionSequence make_inversion_sequence_unchecked(std::vector<int> word);

    std::vector<int> word_;
};

Permutation make_permutation(std::vector<int> word);
InversionSequence make_inversion_sequence(std::vector<int> word);

/// Skips validation; for hot enumeration loops whose output is valid by construction.
Permutation make_permutation_unchecked(std::vector<int> word);
InversionSequence make_inversion_sequence_unchecked(std::vector<int> word);

/// e_i = #{j < i : p_j > p_i}
InversionSequence theta(const Permutation& p);

Permutation inverse(const Permutation& p);

/// Comma-separated integers, e.g. "5,3,6,8", or a run of digits such as "5364"
/// with one letter per digit. The empty string is the empty word.
std::string encode_word(std::span<const int> word);
std::vector<int> parse_word(std::string_view text);

}  // namespace schroder
