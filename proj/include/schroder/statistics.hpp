#pragma once

#include "schroder/core.hpp"
#include "schroder/polynomial.hpp"
#include "schroder/position_set.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schroder {

// Set-valued statistics on permutations.
PositionSet des_set(const Permutation& p);
/// {i in [2,n] : value p_i + 1 sits left of position i}
PositionSet vid_set(const Permutation& p);
PositionSet lma_set(const Permutation& p);
PositionSet lmi_set(const Permutation& p);
PositionSet rma_set(const Permutation& p);
PositionSet rmi_set(const Permutation& p);

// Set-valued statistics on inversion sequences.
PositionSet asc_set(const InversionSequence& e);
/// Positions of the last occurrence of each distinct positive entry.
PositionSet dist_set(const InversionSequence& e);
PositionSet zero_set(const InversionSequence& e);
/// {i : e_i = i - 1}
PositionSet ema_set(const InversionSequence& e);
/// Right-to-left minima: {i : e_i < e_j for all j > i}.
PositionSet rmi_seq_set(const InversionSequence& e);

inline int des(const Permutation& p) { return des_set(p).size(); }
inline int ides(const Permutation& p) { return des_set(inverse(p)).size(); }
inline int asc(const InversionSequence& e) { return asc_set(e).size(); }
inline int dist(const InversionSequence& e) { return dist_set(e).size(); }

/// An ordered tuple of set statistics, optionally followed by numeric ones.
struct StatTuple {
    std::vector<PositionSet> sets;
    std::vector<int> numbers;

    /// Canonical bytes: equal tuples encode identically, and byte order is a total order.
    std::string encode() const;
    std::string to_string() const;

    friend bool operator==(const StatTuple&, const StatTuple&) = default;
};

/// Multiset of stat tuples keyed by canonical encoding. Merging is
/// commutative and associative, so partial sweeps can be combined freely.
class TupleMultiset {
public:
    void add(const StatTuple& tuple, std::uint64_t multiplicity = 1);
    void merge(const TupleMultiset& other);

    std::uint64_t total() const noexcept { return total_; }
    std::size_t distinct() const noexcept { return entries_.size(); }
    std::uint64_t multiplicity(const StatTuple& tuple) const;

    struct Entry {
        StatTuple tuple;
        std::uint64_t count = 0;
    };
    const std::map<std::string, Entry>& entries() const noexcept { return entries_; }

private:
    std::map<std::string, Entry> entries_;
    std::uint64_t total_ = 0;
};

struct EquidistributionReport {
    bool equal = true;
    /// A tuple whose multiplicities differ, when unequal.
    std::optional<StatTuple> witness;
    std::uint64_t lhs_multiplicity = 0;
    std::uint64_t rhs_multiplicity = 0;
};

EquidistributionReport equidistributed(const TupleMultiset& lhs, const TupleMultiset& rhs);
EquidistributionReport equidistributed(const std::vector<StatTuple>& lhs,
                                       const std::vector<StatTuple>& rhs);

/// A named numeric statistic, e.g. {"t", des}.
template <class Object>
struct NumericStat {
    std::string variable;
    std::function<int(const Object&)> value;
};

/// Distribution polynomial: the coefficient of x^v counts the objects whose
/// statistic vector is v.
template <class Range, class Object = typename Range::value_type>
Polynomial distribution(const Range& objects, const std::vector<NumericStat<Object>>& stats) {
    std::vector<std::string> vars;
    for (const auto& s : stats) vars.push_back(s.variable);
    std::map<Exponents, std::uint64_t> counts;
    Exponents exps(stats.size());
    for (const auto& obj : objects) {
        for (std::size_t k = 0; k < stats.size(); ++k)
            exps[k] = static_cast<unsigned>(stats[k].value(obj));
        ++counts[exps];
    }
    Polynomial out(std::move(vars));
    for (const auto& [e, c] : counts) out.add_term(e, BigInt(c));
    return out;
}

struct GammaDecomposition {
    bool ok = false;
    /// gamma_0, gamma_1, ... (up to the failing index when !ok).
    std::vector<BigInt> gamma;
    /// What remains after peeling; zero iff ok.
    std::vector<BigInt> residual;
    std::string diagnostic;
};

/// Writes poly = sum_k gamma_k t^k (1+t)^(n-1-2k) by peeling the lowest
/// surviving coefficient. Fails on a negative gamma or a leftover remainder.
GammaDecomposition gamma_decompose(const std::vector<BigInt>& coefficients, int n);
GammaDecomposition gamma_decompose(const Polynomial& poly, int n);

/// sum_k gamma_k t^k (1+t)^(n-1-2k)
std::vector<BigInt> gamma_expand(const std::vector<BigInt>& gamma, int n);

}  // namespace schroder
