#pragma once

// Brute-force reference implementations, written from the definitions and
// independent of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline std::vector<Word> permutations(int n) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// All words with 0 <= e_i <= i-1, in lexicographic order.
inline std::vector<Word> inversion_sequences(int n) {
    std::vector<Word> out;
    Word e(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(e);
        int i = n - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] == i) e[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++e[static_cast<std::size_t>(i)];
    }
    return out;
}

inline int sign(int a, int b) { return (a > b) - (a < b); }

/// Tries every index subset of the right length.
inline bool contains(const Word& w, const Word& pat) {
    const int n = static_cast<int>(w.size()), k = static_cast<int>(pat.size());
    if (k > n) return false;
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        Word sub;
        for (int i = 0; i < n; ++i)
            if (pick[static_cast<std::size_t>(i)]) sub.push_back(w[static_cast<std::size_t>(i)]);
        bool iso = true;
        for (int a = 0; a < k && iso; ++a)
            for (int b = 0; b < k && iso; ++b)
                iso = sign(sub[static_cast<std::size_t>(a)], sub[static_cast<std::size_t>(b)]) ==
                      sign(pat[static_cast<std::size_t>(a)], pat[static_cast<std::size_t>(b)]);
        if (iso) return true;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

inline bool avoids(const Word& w, const std::vector<Word>& pats) {
    return std::none_of(pats.begin(), pats.end(), [&](const Word& p) { return contains(w, p); });
}

inline std::vector<Word> avoiding_permutations(int n, const std::vector<Word>& pats) {
    std::vector<Word> out;
    for (auto& p : permutations(n))
        if (avoids(p, pats)) out.push_back(p);
    return out;
}

inline std::vector<Word> avoiding_inversion_sequences(int n, const std::vector<Word>& pats) {
    std::vector<Word> out;
    for (auto& e : inversion_sequences(n))
        if (avoids(e, pats)) out.push_back(e);
    return out;
}

// 1-based accessor
inline int at(const Word& w, int i) { return w[static_cast<std::size_t>(i - 1)]; }

using Set = std::vector<int>;

inline Set des(const Word& p) {
    Set s;
    for (int i = 1; i < static_cast<int>(p.size()); ++i)
        if (at(p, i) > at(p, i + 1)) s.push_back(i);
    return s;
}

inline Set asc(const Word& e) {
    Set s;
    for (int i = 1; i < static_cast<int>(e.size()); ++i)
        if (at(e, i) < at(e, i + 1)) s.push_back(i);
    return s;
}

inline Set vid(const Word& p) {
    const int n = static_cast<int>(p.size());
    Set s;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (at(p, j) == at(p, i) + 1) s.push_back(i);
    return s;
}

template <class Cmp>
Set records(const Word& p, bool from_left, Cmp beats) {
    const int n = static_cast<int>(p.size());
    Set s;
    for (int i = 1; i <= n; ++i) {
        bool rec = true;
        for (int j = 1; j <= n; ++j)
            if ((from_left ? j < i : j > i) && !beats(at(p, i), at(p, j))) rec = false;
        if (rec) s.push_back(i);
    }
    return s;
}

inline Set lma(const Word& p) { return records(p, true, std::greater<>()); }
inline Set lmi(const Word& p) { return records(p, true, std::less<>()); }
inline Set rma(const Word& p) { return records(p, false, std::greater<>()); }
inline Set rmi(const Word& p) { return records(p, false, std::less<>()); }

inline Set dist(const Word& e) {
    const int n = static_cast<int>(e.size());
    Set s;
    for (int i = 1; i <= n; ++i) {
        if (at(e, i) == 0) continue;
        bool last = true;
        for (int j = i + 1; j <= n; ++j) last = last && at(e, j) != at(e, i);
        if (last) s.push_back(i);
    }
    return s;
}

inline Set zero(const Word& e) {
    Set s;
    for (int i = 1; i <= static_cast<int>(e.size()); ++i)
        if (at(e, i) == 0) s.push_back(i);
    return s;
}

inline Set ema(const Word& e) {
    Set s;
    for (int i = 1; i <= static_cast<int>(e.size()); ++i)
        if (at(e, i) == i - 1) s.push_back(i);
    return s;
}

inline Set rmi_seq(const Word& e) { return records(e, false, std::less<>()); }

inline Word theta(const Word& p) {
    Word e;
    for (int i = 1; i <= static_cast<int>(p.size()); ++i) {
        int c = 0;
        for (int j = 1; j < i; ++j) c += at(p, j) > at(p, i);
        e.push_back(c);
    }
    return e;
}

inline Word inverse(const Word& p) {
    Word q(p.size());
    for (int i = 1; i <= static_cast<int>(p.size()); ++i) q[static_cast<std::size_t>(at(p, i) - 1)] = i;
    return q;
}

/// Large Schroder numbers 1, 2, 6, 22, ... from the convolution recurrence.
inline std::vector<std::uint64_t> schroder(int count) {
    std::vector<std::uint64_t> r{1};
    while (static_cast<int>(r.size()) < count) {
        const std::size_t m = r.size();
        std::uint64_t next = r[m - 1];
        for (std::size_t k = 0; k < m; ++k) next += r[k] * r[m - 1 - k];
        r.push_back(next);
    }
    return r;
}

/// Counts of Schroder (n)-paths by number of ascents, by dynamic programming
/// over (position, height, last step was U).
inline std::map<int, std::uint64_t> schroder_path_ascents(int n) {
    // state: width used, height, previous step U?, ascents -> count
    std::map<std::tuple<int, int, bool, int>, std::uint64_t> cur{{{0, 0, false, 0}, 1}};
    std::map<int, std::uint64_t> out;
    while (!cur.empty()) {
        std::map<std::tuple<int, int, bool, int>, std::uint64_t> next;
        for (const auto& [state, count] : cur) {
            auto [w, h, up, a] = state;
            if (w == 2 * n) {
                if (h == 0) out[a] += count;
                continue;
            }
            if (w + 1 <= 2 * n) {
                next[{w + 1, h + 1, true, a + (up ? 0 : 1)}] += count;
                if (h > 0) next[{w + 1, h - 1, false, a}] += count;
            }
            if (w + 2 <= 2 * n) next[{w + 2, h, false, a}] += count;
        }
        cur = std::move(next);
    }
    return out;
}

}  // namespace oracle
