#pragma once

#include "schroder/core.hpp"
#include "schroder/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace schroder {

/// p = w1 w2 x w3 w4 where w2 / w3 are the maximal blocks of letters larger
/// than x immediately left / right of x.
struct XFactorization {
    std::vector<int> w1, w2, w3, w4;
    int x = 0;
};

XFactorization x_factorize(const Permutation& p, int x);

/// Foata-Strehl hop: w1 w3 x w2 w4. An involution.
Permutation fs_act(const Permutation& p, int x);

/// Classification of a value with -infinity on both sides of the word.
enum class ValueKind { double_ascent, double_descent, peak, valley };
ValueKind classify(const Permutation& p, int x);

/// The hop on double ascents and double descents, the identity on peaks and valleys.
Permutation mfs_act(const Permutation& p, int x);

/// Closure of {p} under every mfs_act, sorted.
std::vector<Permutation> mfs_orbit(const Permutation& p);

/// The orbit element without double descents.
Permutation canonical_rep(const Permutation& p);

int double_ascents(const Permutation& p);
int double_descents(const Permutation& p);

struct InvarianceReport {
    bool invariant = true;
    std::optional<Permutation> witness;  ///< a member mapped outside the class
    int x = 0;                           ///< the value whose action escapes
};

/// Closure of a materialized class of equal-length permutations under every mfs_act.
InvarianceReport check_invariance(std::span<const Permutation> cls);

/// gamma_k = #{p in class : des(p) = k, no double descents}. Throws
/// std::invalid_argument if the class is not closed under the action.
std::vector<BigInt> gamma_via_orbits(std::span<const Permutation> cls);

/// 021-avoiders with asc = k, no double ascents and e_{n-1} >= e_n.
std::vector<InversionSequence> tilde_invseq(int n, int k);
std::uint64_t tilde_invseq_count(int n, int k);
/// Counts for k = 0 .. floor((n-1)/2).
std::vector<BigInt> tilde_invseq_gamma(int n);

}  // namespace schroder
