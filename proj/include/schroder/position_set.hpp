#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace schroder {

/// A subset of {1,...,n}. Positions 1..64 live in a single machine word;
/// larger universes spill into an overflow vector that stays empty otherwise.
class PositionSet {
public:
    PositionSet() = default;
    explicit PositionSet(int universe);
    PositionSet(int universe, std::initializer_list<int> members);
    PositionSet(int universe, const std::vector<int>& members);

    int universe() const noexcept { return universe_; }

    void insert(int position);
    void erase(int position);
    bool contains(int position) const noexcept;
    int size() const noexcept;
    bool empty() const noexcept;

    /// Members in ascending order.
    std::vector<int> members() const;

    /// Low word; bit i-1 stands for position i. Only meaningful for universe <= 64.
    std::uint64_t low_bits() const noexcept { return low_; }

    bool is_subset_of(const PositionSet& other) const noexcept;

    /// "{1,4,5,7}"
    std::string to_string() const;
    static PositionSet parse(std::string_view text, int universe);

    /// Appends a fixed-layout byte encoding; equal sets give equal bytes.
    void append_bytes(std::string& out) const;

    friend bool operator==(const PositionSet&, const PositionSet&) = default;
    friend std::strong_ordering operator<=>(const PositionSet& a, const PositionSet& b);

private:
    int universe_ = 0;
    std::uint64_t low_ = 0;
    std::vector<std::uint64_t> high_;
};

}  // namespace schroder
