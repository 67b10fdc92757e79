#include "schroder/position_set.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace schroder {

namespace {

std::size_t high_words(int universe) {
    return universe <= 64 ? 0 : static_cast<std::size_t>((universe - 64 + 63) / 64);
}

}  // namespace

PositionSet::PositionSet(int universe) : universe_(universe), high_(high_words(universe), 0) {
    if (universe < 0) throw std::invalid_argument("PositionSet: negative universe");
}

PositionSet::PositionSet(int universe, std::initializer_list<int> members) : PositionSet(universe) {
    for (int m : members) insert(m);
}

PositionSet::PositionSet(int universe, const std::vector<int>& members) : PositionSet(universe) {
    for (int m : members) insert(m);
}

void PositionSet::insert(int position) {
    if (position < 1 || position > universe_)
        throw std::out_of_range("PositionSet: position " + std::to_string(position) +
                                " outside [1," + std::to_string(universe_) + "]");
    int bit = position - 1;
    if (bit < 64)
        low_ |= std::uint64_t{1} << bit;
    else
        high_[(bit - 64) / 64] |= std::uint64_t{1} << ((bit - 64) % 64);
}

void PositionSet::erase(int position) {
    if (position < 1 || position > universe_) return;
    int bit = position - 1;
    if (bit < 64)
        low_ &= ~(std::uint64_t{1} << bit);
    else
        high_[(bit - 64) / 64] &= ~(std::uint64_t{1} << ((bit - 64) % 64));
}

bool PositionSet::contains(int position) const noexcept {
    if (position < 1 || position > universe_) return false;
    int bit = position - 1;
    if (bit < 64) return (low_ >> bit) & 1u;
    return (high_[(bit - 64) / 64] >> ((bit - 64) % 64)) & 1u;
}

int PositionSet::size() const noexcept {
    int total = std::popcount(low_);
    for (auto w : high_) total += std::popcount(w);
    return total;
}

bool PositionSet::empty() const noexcept { return size() == 0; }

std::vector<int> PositionSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t w = low_; w != 0; w &= w - 1) out.push_back(std::countr_zero(w) + 1);
    for (std::size_t k = 0; k < high_.size(); ++k)
        for (std::uint64_t w = high_[k]; w != 0; w &= w - 1)
            out.push_back(65 + static_cast<int>(64 * k) + std::countr_zero(w));
    return out;
}

bool PositionSet::is_subset_of(const PositionSet& other) const noexcept {
    for (int m : members())
        if (!other.contains(m)) return false;
    return true;
}

std::string PositionSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int m : members()) {
        if (!first) out += ',';
        out += std::to_string(m);
        first = false;
    }
    out += '}';
    return out;
}

PositionSet PositionSet::parse(std::string_view text, int universe) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("PositionSet: expected braces in '" + std::string(text) + "'");
    PositionSet out(universe);
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
        auto comma = body.find(',');
        auto token = body.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("PositionSet: bad member '" + std::string(token) + "'");
        out.insert(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return out;
}

void PositionSet::append_bytes(std::string& out) const {
    auto put = [&out](std::uint64_t w) {
        for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((w >> (8 * (7 - b))) & 0xff));
    };
    put(static_cast<std::uint64_t>(universe_));
    for (auto it = high_.rbegin(); it != high_.rend(); ++it) put(*it);
    put(low_);
}

std::strong_ordering operator<=>(const PositionSet& a, const PositionSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t k = a.high_.size(); k-- > 0;)
        if (auto c = a.high_[k] <=> b.high_[k]; c != 0) return c;
    return a.low_ <=> b.low_;
}

}  // namespace schroder
