#pragma once

#include "schroder/core.hpp"
#include "schroder/position_set.hpp"

#include <map>
#include <optional>
#include <vector>

namespace schroder {

/// Labels the east steps of the outline of a 021-avoiding inversion sequence
/// by drawing diagonal lines; the label of step i becomes the i-th letter.
/// The image avoids 2413 and 4213.
Permutation psi(const InversionSequence& e);

/// Rebuilds the outline height by height in label order.
InversionSequence psi_inverse(const Permutation& p);

/// Left-to-right maxima positions (other than the first) whose value exceeds
/// the previous left-to-right maximum by more than one.
PositionSet big_jumps(const Permutation& p);

/// Shifts values >= k up by one and appends k.
Permutation insert_tk(const Permutation& p, int k);

/// Available inserting values {k in [n] : T_k(p) avoids 2413 and 4213}, descending.
std::vector<int> ava(const Permutation& p);

/// Recursive insertion bijection S_n(2413,4213) -> I_n(021) carrying DES to ASC.
InversionSequence phi(const Permutation& p);
Permutation phi_inverse(const InversionSequence& e);

/// Forward lookup table of psi over I_n(021), used to cross-check psi_inverse.
class PsiTable {
public:
    explicit PsiTable(int n);

    int size() const noexcept { return n_; }
    std::optional<InversionSequence> preimage(const Permutation& p) const;
    /// False if two sequences shared an image, i.e. psi was not injective.
    bool injective() const noexcept { return injective_; }
    std::size_t entries() const noexcept { return table_.size(); }

private:
    int n_;
    bool injective_ = true;
    std::map<Permutation, InversionSequence> table_;
};

}  // namespace schroder
