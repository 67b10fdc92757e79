#include "helpers.hpp"

#include <doctest.h>
#include <schroder/outline.hpp>
#include <schroder/patterns.hpp>
#include <schroder/statistics.hpp>

#include <set>

using namespace schroder;

namespace {

struct Seg {
    int offset;
    std::vector<int> touched;
    bool operator==(const Seg&) const = default;
};

// Lattice-point reading of the line geometry: (x, x-c) is in the closed region
// iff x - c >= h_x (h_0 = 0), and consecutive points are joined iff the unit
// piece stays above the east step beneath it.
std::vector<Seg> lines_oracle(const TwoColoredDyckPath& d) {
    const int n = d.size();
    auto floor_at = [&](int x) { return x == 0 ? 0 : d.height(x); };
    std::vector<Seg> out;
    for (int c = 0; c < n; ++c) {
        Seg cur{c, {}};
        bool open = false;
        for (int x = c; x <= n; ++x) {
            const bool inside = x - c >= floor_at(x);
            const bool joined = open && x >= 1 && x - 1 - c >= d.height(x);
            if (!inside || (open && !joined)) {
                if (!cur.touched.empty()) out.push_back(cur);
                cur = Seg{c, {}};
                open = false;
            }
            if (!inside) continue;
            open = true;
            if (x < n && d.offset(x + 1) == c) cur.touched.push_back(x + 1);
        }
        if (!cur.touched.empty()) out.push_back(cur);
    }
    std::sort(out.begin(), out.end(), [](const Seg& a, const Seg& b) { return a.touched[0] < b.touched[0]; });
    return out;
}

std::vector<Seg> segs(const std::vector<DiagonalLine>& lines) {
    std::vector<Seg> out;
    for (const auto& l : lines) out.push_back({l.offset, l.touched});
    return out;
}

std::vector<int> heights_oracle(const oracle::Word& e) {
    std::vector<int> h;
    int mx = 0;
    for (int v : e) {
        mx = std::max(mx, v);
        h.push_back(v != 0 ? v : mx);
    }
    return h;
}

int turn_oracle(const TwoColoredDyckPath& d) {
    int turns = 0;
    for (int i = 1; i <= d.size(); ++i) turns += i == d.size() || d.height(i + 1) > d.height(i);
    return turns - 1;
}

int segment_oracle(const TwoColoredDyckPath& d) {
    int count = 0;
    for (int i = 1; i <= d.size(); ++i)
        if (!d.is_red(i) && (i == 1 || d.is_red(i - 1) || d.height(i - 1) != d.height(i))) ++count;
    return count;
}

// Walks every lattice point of the path and counts diagonal visits after the first east step.
int return_oracle(const TwoColoredDyckPath& d) {
    int x = 0, y = 0, count = 0;
    for (int i = 1; i <= d.size(); ++i) {
        while (y < d.height(i)) {
            ++y;
            if (x >= 1 && x == y) ++count;
        }
        ++x;
        if (x == y) ++count;
    }
    while (y < d.size()) {
        ++y;
        if (x == y) ++count;
    }
    return count;
}

std::vector<TwoColoredDyckPath> all_weak_paths(int n) {
    std::vector<TwoColoredDyckPath> out;
    std::vector<int> h;
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<bool> red;
                for (int k = 0; k < n; ++k) red.push_back((mask >> k) & 1);
                out.emplace_back(h, red);
            }
            return;
        }
        for (int v = h.empty() ? 0 : h.back(); v <= i - 1; ++v) {
            h.push_back(v);
            self(self, i + 1);
            h.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

bool c1c2(const TwoColoredDyckPath& d) {
    for (int i = 1; i <= d.size(); ++i) {
        if (d.height(i) == 0 && !d.is_red(i)) return false;
        if (d.height(i) > 0 && (i == 1 || d.height(i - 1) != d.height(i)) && d.is_red(i)) return false;
    }
    return true;
}

bool c2(const TwoColoredDyckPath& d) {
    for (int i = 1; i <= d.size(); ++i)
        if (d.height(i) > 0 && (i == 1 || d.height(i - 1) != d.height(i)) && d.is_red(i)) return false;
    return true;
}

}  // namespace

TEST_SUITE("outline") {

TEST_CASE("outline examples") {
    auto d = outline_of(E("0,1,0,1,2,0,4"));
    CHECK(d.heights() == std::vector<int>{0, 1, 1, 1, 2, 2, 4});
    CHECK(d.to_string() == "0r,1,1r,1,2,2r,4");
    auto big = outline_of(E("0,1,0,0,1,3,0,7,0,0,7,10"));
    CHECK(big.heights() == std::vector<int>{0, 1, 1, 1, 1, 3, 3, 7, 7, 7, 7, 10});
    std::vector<int> reds;
    for (int i = 1; i <= big.size(); ++i)
        if (big.is_red(i)) reds.push_back(i);
    CHECK(reds == std::vector<int>{1, 3, 4, 7, 9, 10});
    CHECK(outline_of(E("0,0,0")).to_string() == "0r,0r,0r");
    CHECK_THROWS_AS(outline_of(E("0,0,2,1")), ValidationError);
}

TEST_CASE("invert_outline") {
    for (auto text : {"0,1,0,1,2,0,4", "0,1,0,0,1,3,0,7,0,0,7,10", "0,0,0"})
        CHECK(invert_outline(outline_of(E(text))) == E(text));
    CHECK_THROWS_AS(invert_outline(TwoColoredDyckPath({0, 0}, {true, false})), ValidationError);
    CHECK(TwoColoredDyckPath::parse("0r,1,1r,1,2,2r,4") == outline_of(E("0,1,0,1,2,0,4")));
    CHECK_THROWS_AS(TwoColoredDyckPath({0, 2}, {true, false}), ValidationError);
    CHECK_THROWS_AS(TwoColoredDyckPath({0, 1, 0}, {true, false, true}), ValidationError);
}

TEST_CASE("C and EXPO") {
    CHECK(c_set(E("0,1,0,1,2,0,4")).to_string() == "{3}");
    CHECK(c_set(E("0,0,0")).empty());
    CHECK(c_set(E("0,1,0,0,1,3,0,7,0,0,7,10")).to_string() == "{3,4,9,10}");
    CHECK(expo_set(E("0,1,0,1,2,0,4")).to_string() == "{2,7}");
    CHECK(expo_set(E("0,1,0,0,1,3,0,7,0,0,7,10")).to_string() == "{8,12}");
    CHECK(expo_set(E("0")).to_string() == "{1}");
}

TEST_CASE("C and EXPO against definitions") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : enumerate_021_avoiding(n)) {
            const auto w = W(e.word());
            const auto h = heights_oracle(w);
            std::vector<int> c, expo;
            for (int i = 1; i <= n; ++i) {
                bool in_c = false;
                if (w[i - 1] == 0)
                    for (int a = 1; a < i; ++a)
                        for (int b = i + 1; b <= n; ++b) in_c = in_c || (w[a - 1] == w[b - 1] && w[a - 1] != 0);
                if (in_c) c.push_back(i);
                bool exposed = !in_c;
                for (int j = i + 1; j <= n; ++j) exposed = exposed && i - h[i - 1] < j - h[j - 1];
                if (exposed) expo.push_back(i);
            }
            CHECK(S(c_set(e)) == c);
            CHECK(S(expo_set(e)) == expo);
            CHECK(expo_set(e).contains(n));
            CHECK(outline_of(e).heights() == h);
        }
}

TEST_CASE("lines of the twelve-step example") {
    auto lines = segs(lines_of(outline_of(E("0,1,0,0,1,3,0,7,0,0,7,10"))));
    std::vector<Seg> want{{0, {1, 2, 8}}, {1, {3}},  {2, {4, 6}}, {3, {5}},
                          {3, {7}},       {1, {9, 12}}, {2, {10}}, {3, {11}}};
    CHECK(lines.size() == 8);
    CHECK(lines == want);
}

TEST_CASE("lines of small examples") {
    auto flat = segs(lines_of(outline_of(E("0,0,0"))));
    CHECK(flat == std::vector<Seg>{{0, {1}}, {1, {2}}, {2, {3}}});
    auto fig = lines_of(outline_of(E("0,1,0,1,2,0,4")));
    CHECK(fig.front().offset == 0);
    CHECK(fig.front().touched == std::vector<int>{1, 2});
}

TEST_CASE("lines against the lattice oracle and partition property") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& e : enumerate_021_avoiding(n)) {
            const auto d = outline_of(e);
            const auto lines = lines_of(d);
            CHECK(segs(lines) == lines_oracle(d));
            std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
            for (const auto& l : lines)
                for (int i : l.touched) {
                    ++seen[static_cast<std::size_t>(i)];
                    CHECK(d.offset(i) == l.offset);
                    CHECK(l.x_lo <= i - 1);
                    CHECK(i - 1 <= l.x_hi);
                }
            CHECK(std::count(seen.begin() + 1, seen.end(), 1) == n);
            // same-offset lines are disjoint
            for (std::size_t a = 0; a < lines.size(); ++a)
                for (std::size_t b = a + 1; b < lines.size(); ++b)
                    if (lines[a].offset == lines[b].offset)
                        CHECK((lines[a].x_hi < lines[b].x_lo || lines[b].x_hi < lines[a].x_lo));
        }
}

TEST_CASE("path statistics") {
    TwoColoredDyckPath d({0, 0, 2, 2, 2, 2, 5, 7, 7, 7, 7, 7},
                         {true, true, false, true, false, true, false, false, true, true, false, false});
    CHECK(turn(d) == 3);
    CHECK(segment(d) == 5);
    CHECK(red_count(d) == 6);
    CHECK(return_count(d) == 3);
    TwoColoredDyckPath one({0}, {true});
    CHECK(turn(one) == 0);
    CHECK(segment(one) == 0);
    CHECK(red_count(one) == 1);
    CHECK(return_count(one) == 1);
    auto fig = outline_of(E("0,1,0,1,2,0,4"));
    CHECK(std::vector<int>{turn(fig), segment(fig), red_count(fig), return_count(fig)} ==
          std::vector<int>{3, 4, 3, 2});
}

TEST_CASE("statistics of outlines match the sequence statistics") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& e : enumerate_021_avoiding(n)) {
            const auto d = outline_of(e);
            CHECK(turn(d) == dist(e));
            CHECK(segment(d) == asc(e));
            CHECK(red_count(d) == zero_set(e).size());
            CHECK(return_count(d) == ema_set(e).size());
            if (n <= 7) {
                CHECK(turn(d) == turn_oracle(d));
                CHECK(segment(d) == segment_oracle(d));
                CHECK(return_count(d) == return_oracle(d));
            }
        }
}

TEST_CASE("path classes") {
    CHECK(is_in_class(TwoColoredDyckPath({0}, {false}), PathClass::B));
    CHECK_FALSE(is_in_class(TwoColoredDyckPath({0}, {false}), PathClass::A));
    CHECK(is_in_class(TwoColoredDyckPath({0}, {true}), PathClass::R));
    CHECK(is_in_class(TwoColoredDyckPath({0}, {true}), PathClass::A));
    CHECK(enumerate_paths(0, PathClass::A).size() == 1);
    CHECK(enumerate_paths(0, PathClass::B).empty());

    const auto schroder = oracle::schroder(9);
    for (int n = 1; n <= 7; ++n) {
        std::vector<TwoColoredDyckPath> a, b, r;
        for (const auto& d : all_weak_paths(n)) {
            if (c1c2(d)) a.push_back(d);
            if (c2(d) && !d.is_red(1)) b.push_back(d);
            if (c2(d) && d.is_red(1)) r.push_back(d);
        }
        auto sorted = [](std::vector<TwoColoredDyckPath> v) {
            std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
                return std::tie(x.heights(), x.red()) < std::tie(y.heights(), y.red());
            });
            return v;
        };
        CHECK(sorted(enumerate_paths(n, PathClass::A)) == sorted(a));
        CHECK(sorted(enumerate_paths(n, PathClass::B)) == sorted(b));
        CHECK(sorted(enumerate_paths(n, PathClass::R)) == sorted(r));
        CHECK(a.size() == schroder[static_cast<std::size_t>(n - 1)]);

        std::vector<TwoColoredDyckPath> outlines;
        for (const auto& e : enumerate_021_avoiding(n)) outlines.push_back(outline_of(e));
        CHECK(sorted(outlines) == sorted(a));
    }
}

TEST_CASE("first-return decomposition") {
    auto single = first_return_decompose(TwoColoredDyckPath({0}, {false}));
    CHECK(single.first.size() == 0);
    CHECK(single.rest.size() == 0);
    CHECK(single.k == 1);
    CHECK_THROWS_AS(first_return_decompose(TwoColoredDyckPath({0}, {true})), ValidationError);

    for (int n = 1; n <= 7; ++n)
        for (const auto& d : enumerate_paths(n, PathClass::B)) {
            const auto parts = first_return_decompose(d);
            const auto& d1 = parts.first;
            const auto& d2 = parts.rest;
            CHECK(recompose(parts) == d);
            CHECK(d1.size() == parts.k - 1);
            if (d1.size() > 0) CHECK((is_in_class(d1, PathClass::B) || is_in_class(d1, PathClass::R)));
            if (d2.size() > 0) CHECK(is_in_class(d2, PathClass::B));
            const bool d1_red = d1.size() == 0 || d1.is_red(1);
            CHECK(turn(d) == turn(d1) + turn(d2) + (parts.k != n));
            CHECK(segment(d) == segment(d1) + segment(d2) + d1_red);
            CHECK(red_count(d) == red_count(d1) + red_count(d2));
            CHECK(return_count(d) == 1 + return_count(d2));
        }
}

}
