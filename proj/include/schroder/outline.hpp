#pragma once

#include "schroder/core.hpp"
#include "schroder/position_set.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace schroder {

/// A Dyck path from (0,0) to (n,n) stored as the heights of its east steps,
/// each east step colored black or red. Step i runs from (i-1, h_i) to (i, h_i).
class TwoColoredDyckPath {
public:
    TwoColoredDyckPath() = default;
    /// Requires 0 <= h_i <= i-1 and weakly increasing heights.
    TwoColoredDyckPath(std::vector<int> heights, std::vector<bool> red);

    int size() const noexcept { return static_cast<int>(heights_.size()); }
    int height(int step) const { return heights_.at(static_cast<std::size_t>(step - 1)); }
    bool is_red(int step) const { return red_.at(static_cast<std::size_t>(step - 1)); }
    /// Offset c of the diagonal y = x - c through the initial point of the step.
    int offset(int step) const { return step - 1 - height(step); }

    const std::vector<int>& heights() const noexcept { return heights_; }
    const std::vector<bool>& red() const noexcept { return red_; }

    /// "0r,1,1r,1,2,2r,4"
    std::string to_string() const;
    static TwoColoredDyckPath parse(std::string_view text);

    friend bool operator==(const TwoColoredDyckPath&, const TwoColoredDyckPath&) = default;

private:
    std::vector<int> heights_;
    std::vector<bool> red_;
};

/// A maximal segment of y = x - offset inside the closed region between the
/// path and the diagonal, spanning x_lo <= x <= x_hi.
struct DiagonalLine {
    int offset = 0;
    int x_lo = 0;
    int x_hi = 0;
    /// Steps whose initial point lies on the segment, ascending.
    std::vector<int> touched;

    int begin_step() const { return touched.front(); }
    /// The rightmost touched step; heights grow along a line, so it is also the highest.
    int highest_step() const { return touched.back(); }

    friend bool operator==(const DiagonalLine&, const DiagonalLine&) = default;
};

/// Heights follow nonzero entries; a zero becomes a red step at the running maximum.
TwoColoredDyckPath outline_of(const InversionSequence& e);
InversionSequence invert_outline(const TwoColoredDyckPath& path);

/// {i : e_i = 0 and some a < i < b has e_a = e_b != 0}
PositionSet c_set(const InversionSequence& e);
/// Exposed positions: i not in c_set(e) with i - d_i < j - d_j for every j > i.
PositionSet expo_set(const InversionSequence& e);

/// Every line that touches at least one step, ordered by begin step. The
/// first entry is the diagonal.
std::vector<DiagonalLine> lines_of(const TwoColoredDyckPath& path);

/// Number of east steps immediately followed by a north step, minus one.
int turn(const TwoColoredDyckPath& path);
/// Maximal runs of consecutive black steps of equal height.
int segment(const TwoColoredDyckPath& path);
int red_count(const TwoColoredDyckPath& path);
/// Lattice points on y = x visited after the start, the endpoint included.
int return_count(const TwoColoredDyckPath& path);

enum class PathClass { A, B, R };

/// A: height-0 steps red and the first step of each positive height black.
/// B / R: the positive-height condition plus a black / red first step.
bool is_in_class(const TwoColoredDyckPath& path, PathClass cls);

/// All paths of length n in the class, ordered by (heights, colors).
std::vector<TwoColoredDyckPath> enumerate_paths(int n, PathClass cls);

struct FirstReturn {
    TwoColoredDyckPath first;  ///< d_2 .. d_k, in B or R
    TwoColoredDyckPath rest;   ///< (d_{k+1} - k) .. (d_n - k), in B
    int k = 0;
};

FirstReturn first_return_decompose(const TwoColoredDyckPath& path);
TwoColoredDyckPath recompose(const FirstReturn& parts);

}  // namespace schroder
