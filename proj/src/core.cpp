#include "schroder/core.hpp"

#include <charconv>
#include <numeric>

namespace schroder {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    std::vector<int> seen_at(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int v = word_[static_cast<std::size_t>(i - 1)];
        if (v < 1 || v > n)
            throw ValidationError("permutation: value " + std::to_string(v) + " at index " +
                                  std::to_string(i) + " is outside [1," + std::to_string(n) + "]");
        if (seen_at[static_cast<std::size_t>(v)] != 0)
            throw ValidationError("permutation: duplicate value " + std::to_string(v) + " at index " +
                                  std::to_string(i) + " (first seen at index " +
                                  std::to_string(seen_at[static_cast<std::size_t>(v)]) + ")");
        seen_at[static_cast<std::size_t>(v)] = i;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w), Unchecked{});
}

std::string Permutation::to_string() const { return encode_word(word_); }

InversionSequence::InversionSequence(std::vector<int> word) : word_(std::move(word)) {
    for (int i = 1; i <= size(); ++i) {
        int v = word_[static_cast<std::size_t>(i - 1)];
        if (v < 0 || v >= i)
            throw ValidationError("inversion sequence: entry " + std::to_string(v) + " at index " +
                                  std::to_string(i) + " is outside [0," + std::to_string(i - 1) + "]");
    }
}

InversionSequence InversionSequence::zeros(int n) {
    return InversionSequence(std::vector<int>(static_cast<std::size_t>(n), 0), Unchecked{});
}

std::string InversionSequence::to_string() const { return encode_word(word_); }

Permutation make_permutation(std::vector<int> word) { return Permutation(std::move(word)); }

InversionSequence make_inversion_sequence(std::vector<int> word) {
    return InversionSequence(std::move(word));
}

Permutation make_permutation_unchecked(std::vector<int> word) {
    return Permutation(std::move(word), Permutation::Unchecked{});
}

InversionSequence make_inversion_sequence_unchecked(std::vector<int> word) {
    return InversionSequence(std::move(word), InversionSequence::Unchecked{});
}

InversionSequence theta(const Permutation& p) {
    auto w = p.word();
    std::vector<int> e(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (w[j] > w[i]) ++e[i];
    return make_inversion_sequence_unchecked(std::move(e));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> inv(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) inv[static_cast<std::size_t>(p.at(i) - 1)] = i;
    return make_permutation_unchecked(std::move(inv));
}

std::string encode_word(std::span<const int> word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(word[i]);
    }
    return out;
}

std::vector<int> parse_word(std::string_view text) {
    std::vector<int> out;
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) return out;
    // Compact form for single-digit letters: "5164372".
    if (text.size() > 1 && text.find_first_not_of("0123456789") == std::string_view::npos) {
        for (char c : text) out.push_back(c - '0');
        return out;
    }
    while (true) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw ValidationError("cannot parse integer '" + std::string(token) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace schroder
