#include "schroder/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace schroder {

namespace {

int sign(int v) { return (v > 0) - (v < 0); }

// Backtracking over strictly increasing index choices. `chosen[a]` is the
// word index used for pattern letter a.
bool match(std::span<const int> word, std::span<const int> pat, std::vector<std::size_t>& chosen,
           std::size_t a, std::size_t start, bool last_fixed) {
    const std::size_t k = pat.size();
    if (a == k) return true;
    const std::size_t len = word.size();
    std::size_t lo = start, hi = len - (k - a);  // inclusive upper bound for index of letter a
    if (last_fixed) {
        if (a == k - 1) lo = std::max(lo, len - 1);
        else hi = std::min(hi, len - 1 - (k - 1 - a));
    }
    for (std::size_t i = lo; i <= hi && i < len; ++i) {
        bool ok = true;
        for (std::size_t b = 0; b < a && ok; ++b)
            ok = sign(word[i] - word[chosen[b]]) == sign(pat[a] - pat[b]);
        if (!ok) continue;
        chosen[a] = i;
        if (match(word, pat, chosen, a + 1, i + 1, last_fixed)) return true;
    }
    return false;
}

bool contains_impl(std::span<const int> word, const Pattern& pattern, bool last_fixed) {
    const auto pat = pattern.word();
    if (pat.size() > word.size()) return false;
    std::vector<std::size_t> chosen(pat.size());
    return match(word, pat, chosen, 0, 0, last_fixed);
}

bool prefix_ok(std::span<const int> prefix, std::span<const Pattern> patterns) {
    for (const auto& p : patterns)
        if (contains_ending_at_last(prefix, p)) return false;
    return true;
}

bool permutation_dfs(int n, std::span<const Pattern> patterns, std::vector<int>& word,
                     std::vector<bool>& used, const std::function<bool(const Permutation&)>& visit) {
    if (static_cast<int>(word.size()) == n) return visit(make_permutation_unchecked(word));
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        word.push_back(v);
        if (prefix_ok(word, patterns)) {
            used[static_cast<std::size_t>(v)] = true;
            bool go_on = permutation_dfs(n, patterns, word, used, visit);
            used[static_cast<std::size_t>(v)] = false;
            if (!go_on) {
                word.pop_back();
                return false;
            }
        }
        word.pop_back();
    }
    return true;
}

bool invseq_dfs(int n, std::span<const Pattern> patterns, std::vector<int>& word,
                const std::function<bool(const InversionSequence&)>& visit) {
    const int i = static_cast<int>(word.size()) + 1;
    if (i > n) return visit(make_inversion_sequence_unchecked(word));
    for (int v = 0; v < i; ++v) {
        word.push_back(v);
        if (prefix_ok(word, patterns) && !invseq_dfs(n, patterns, word, visit)) {
            word.pop_back();
            return false;
        }
        word.pop_back();
    }
    return true;
}

void invseq_021_dfs(int n, std::vector<int>& word, int max_positive, std::vector<InversionSequence>& out) {
    const int i = static_cast<int>(word.size()) + 1;
    if (i > n) {
        out.push_back(make_inversion_sequence_unchecked(word));
        return;
    }
    word.push_back(0);
    invseq_021_dfs(n, word, max_positive, out);
    word.pop_back();
    for (int v = std::max(max_positive, 1); v < i; ++v) {
        word.push_back(v);
        invseq_021_dfs(n, word, v, out);
        word.pop_back();
    }
}

// Runs `part(first)` for first in [first_lo, first_hi] on up to `jobs` threads
// and concatenates the per-prefix results in prefix order.
template <class T, class Part>
std::vector<T> run_partitioned(int first_lo, int first_hi, int jobs, Part part) {
    const int parts = first_hi - first_lo + 1;
    if (parts <= 0) return {};
    std::vector<std::vector<T>> results(static_cast<std::size_t>(parts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int k = next++; k < parts; k = next++) results[static_cast<std::size_t>(k)] = part(first_lo + k);
    };
    const int threads = std::clamp(jobs, 1, parts);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    std::vector<T> out;
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Pattern::Pattern(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) throw ValidationError("pattern must have at least one letter");
    for (int v : word_)
        if (v < 0) throw ValidationError("pattern letters must be non-negative");
}

Pattern Pattern::parse(std::string_view digits) {
    std::vector<int> w;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw ValidationError("pattern '" + std::string(digits) + "' must consist of digits");
        w.push_back(c - '0');
    }
    return Pattern(std::move(w));
}

std::string Pattern::to_string() const {
    std::string out;
    bool wide = std::any_of(word_.begin(), word_.end(), [](int v) { return v > 9; });
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (wide && i) out += '.';
        out += std::to_string(word_[i]);
    }
    return out;
}

std::vector<Pattern> parse_patterns(std::string_view text) {
    std::vector<Pattern> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        if (!token.empty()) out.push_back(Pattern::parse(token));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

std::string patterns_to_string(std::span<const Pattern> patterns, char separator) {
    std::string out;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (i) out += separator;
        out += patterns[i].to_string();
    }
    return out;
}

bool contains(std::span<const int> word, const Pattern& pattern) {
    return contains_impl(word, pattern, false);
}

bool contains_ending_at_last(std::span<const int> word, const Pattern& pattern) {
    if (word.empty()) return false;
    return contains_impl(word, pattern, true);
}

bool avoids_all(std::span<const int> word, std::span<const Pattern> patterns) {
    return std::none_of(patterns.begin(), patterns.end(),
                        [word](const Pattern& p) { return contains(word, p); });
}

bool avoids_021(const InversionSequence& e) {
    int last_positive = 0;
    for (int v : e.word()) {
        if (v == 0) continue;
        if (v < last_positive) return false;
        last_positive = v;
    }
    return true;
}

void for_each_avoiding_permutation(int n, std::span<const Pattern> patterns,
                                   const std::function<bool(const Permutation&)>& visit) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<int> word;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    permutation_dfs(n, patterns, word, used, visit);
}

void for_each_avoiding_inversion_sequence(int n, std::span<const Pattern> patterns,
                                          const std::function<bool(const InversionSequence&)>& visit) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<int> word;
    invseq_dfs(n, patterns, word, visit);
}

std::vector<Permutation> enumerate_avoiding_permutations(int n, std::span<const Pattern> patterns,
                                                         int jobs) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (n == 0) return {Permutation{}};
    return run_partitioned<Permutation>(1, n, jobs, [&](int first) {
        std::vector<Permutation> out;
        std::vector<int> word{first};
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        used[static_cast<std::size_t>(first)] = true;
        if (prefix_ok(word, patterns))
            permutation_dfs(n, patterns, word, used, [&out](const Permutation& p) {
                out.push_back(p);
                return true;
            });
        return out;
    });
}

std::vector<InversionSequence> enumerate_avoiding_inversion_sequences(int n,
                                                                      std::span<const Pattern> patterns,
                                                                      int jobs) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (patterns.size() == 1 && patterns[0] == Pattern({0, 2, 1})) return enumerate_021_avoiding(n);
    if (n <= 1) {
        std::vector<InversionSequence> out;
        for_each_avoiding_inversion_sequence(n, patterns, [&out](const InversionSequence& e) {
            out.push_back(e);
            return true;
        });
        return out;
    }
    // e_1 is always 0, so split on e_2.
    return run_partitioned<InversionSequence>(0, 1, jobs, [&](int second) {
        std::vector<InversionSequence> out;
        std::vector<int> word{0, second};
        if (prefix_ok(std::span<const int>(word).first(1), patterns) && prefix_ok(word, patterns))
            invseq_dfs(n, patterns, word, [&out](const InversionSequence& e) {
                out.push_back(e);
                return true;
            });
        return out;
    });
}

std::vector<InversionSequence> enumerate_021_avoiding(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<InversionSequence> out;
    std::vector<int> word;
    invseq_021_dfs(n, word, 0, out);
    return out;
}

}  // namespace schroder
