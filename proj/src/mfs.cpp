#include "schroder/mfs.hpp"

#include "schroder/patterns.hpp"
#include "schroder/statistics.hpp"

#include <algorithm>
#include <set>

namespace schroder {

namespace {

int position_of(const Permutation& p, int x) {
    if (x < 1 || x > p.size())
        throw std::out_of_range("value " + std::to_string(x) + " outside [1," + std::to_string(p.size()) + "]");
    auto w = p.word();
    return static_cast<int>(std::find(w.begin(), w.end(), x) - w.begin()) + 1;
}

}  // namespace

XFactorization x_factorize(const Permutation& p, int x) {
    const int at = position_of(p, x);
    const auto w = p.word();
    int lo = at;  // w2 = positions [lo, at)
    while (lo > 1 && w[static_cast<std::size_t>(lo - 2)] > x) --lo;
    int hi = at;  // w3 = positions (at, hi]
    while (hi < p.size() && w[static_cast<std::size_t>(hi)] > x) ++hi;
    auto slice = [&w](int from, int to) {  // 1-based inclusive
        std::vector<int> out;
        for (int i = from; i <= to; ++i) out.push_back(w[static_cast<std::size_t>(i - 1)]);
        return out;
    };
    return {slice(1, lo - 1), slice(lo, at - 1), slice(at + 1, hi), slice(hi + 1, p.size()), x};
}

Permutation fs_act(const Permutation& p, int x) {
    auto f = x_factorize(p, x);
    std::vector<int> out = f.w1;
    out.insert(out.end(), f.w3.begin(), f.w3.end());
    out.push_back(x);
    out.insert(out.end(), f.w2.begin(), f.w2.end());
    out.insert(out.end(), f.w4.begin(), f.w4.end());
    return make_permutation_unchecked(std::move(out));
}

ValueKind classify(const Permutation& p, int x) {
    const int at = position_of(p, x);
    const bool left_lower = at == 1 || p.at(at - 1) < x;
    const bool right_lower = at == p.size() || p.at(at + 1) < x;
    if (left_lower && !right_lower) return ValueKind::double_ascent;
    if (!left_lower && right_lower) return ValueKind::double_descent;
    return left_lower ? ValueKind::peak : ValueKind::valley;
}

Permutation mfs_act(const Permutation& p, int x) {
    auto kind = classify(p, x);
    if (kind == ValueKind::double_ascent || kind == ValueKind::double_descent) return fs_act(p, x);
    return p;
}

std::vector<Permutation> mfs_orbit(const Permutation& p) {
    std::set<Permutation> seen{p};
    std::vector<Permutation> frontier{p};
    while (!frontier.empty()) {
        auto q = std::move(frontier.back());
        frontier.pop_back();
        for (int x = 1; x <= q.size(); ++x) {
            auto r = mfs_act(q, x);
            if (seen.insert(r).second) frontier.push_back(std::move(r));
        }
    }
    return {seen.begin(), seen.end()};
}

Permutation canonical_rep(const Permutation& p) {
    Permutation q = p;
    // One pass suffices since the hops commute; the loop only guards that claim.
    for (int round = 0; round <= p.size(); ++round) {
        std::vector<int> dd;
        for (int x = 1; x <= q.size(); ++x)
            if (classify(q, x) == ValueKind::double_descent) dd.push_back(x);
        if (dd.empty()) return q;
        for (int x : dd) q = mfs_act(q, x);
    }
    throw InternalInvariantError("canonical_rep: no fixpoint for " + p.to_string());
}

int double_ascents(const Permutation& p) {
    int count = 0;
    for (int x = 1; x <= p.size(); ++x) count += classify(p, x) == ValueKind::double_ascent;
    return count;
}

int double_descents(const Permutation& p) {
    int count = 0;
    for (int x = 1; x <= p.size(); ++x) count += classify(p, x) == ValueKind::double_descent;
    return count;
}

InvarianceReport check_invariance(std::span<const Permutation> cls) {
    std::vector<Permutation> sorted(cls.begin(), cls.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : cls)
        for (int x = 1; x <= p.size(); ++x)
            if (!std::binary_search(sorted.begin(), sorted.end(), mfs_act(p, x))) return {false, p, x};
    return {};
}

std::vector<BigInt> gamma_via_orbits(std::span<const Permutation> cls) {
    if (auto report = check_invariance(cls); !report.invariant)
        throw std::invalid_argument("gamma_via_orbits: class is not closed under the action (" +
                                    report.witness->to_string() + ", x = " + std::to_string(report.x) + ")");
    if (cls.empty()) return {};
    const int n = cls.front().size();
    std::vector<BigInt> gamma(static_cast<std::size_t>(std::max(n - 1, 0) / 2 + 1), BigInt(0));
    for (const auto& p : cls)
        if (double_descents(p) == 0) {
            auto k = static_cast<std::size_t>(des(p));
            if (k >= gamma.size()) gamma.resize(k + 1, BigInt(0));
            gamma[k] += 1;
        }
    return gamma;
}

namespace {

bool in_tilde(const InversionSequence& e, int k) {
    const int n = e.size();
    const auto ascents = asc_set(e);
    if (ascents.size() != k) return false;
    for (int i = 1; i + 1 <= n - 1; ++i)
        if (ascents.contains(i) && ascents.contains(i + 1)) return false;
    return n < 2 || e.at(n - 1) >= e.at(n);
}

}  // namespace

std::vector<InversionSequence> tilde_invseq(int n, int k) {
    std::vector<InversionSequence> out;
    for (auto& e : enumerate_021_avoiding(n))
        if (in_tilde(e, k)) out.push_back(std::move(e));
    return out;
}

std::uint64_t tilde_invseq_count(int n, int k) { return tilde_invseq(n, k).size(); }

std::vector<BigInt> tilde_invseq_gamma(int n) {
    std::vector<BigInt> gamma(static_cast<std::size_t>(std::max(n - 1, 0) / 2 + 1), BigInt(0));
    for (const auto& e : enumerate_021_avoiding(n))
        for (std::size_t k = 0; k < gamma.size(); ++k)
            if (in_tilde(e, static_cast<int>(k))) gamma[k] += 1;
    return gamma;
}

}  // namespace schroder
