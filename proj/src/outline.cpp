#include "schroder/outline.hpp"

#include "schroder/patterns.hpp"

#include <algorithm>

namespace schroder {

TwoColoredDyckPath::TwoColoredDyckPath(std::vector<int> heights, std::vector<bool> red)
    : heights_(std::move(heights)), red_(std::move(red)) {
    if (heights_.size() != red_.size()) throw ValidationError("path: heights and colors differ in length");
    for (int i = 1; i <= size(); ++i) {
        int h = heights_[static_cast<std::size_t>(i - 1)];
        if (h < 0 || h > i - 1)
            throw ValidationError("path: height " + std::to_string(h) + " of step " + std::to_string(i) +
                                  " is outside [0," + std::to_string(i - 1) + "]");
        if (i > 1 && h < heights_[static_cast<std::size_t>(i - 2)])
            throw ValidationError("path: heights must be weakly increasing (step " + std::to_string(i) + ")");
    }
}

std::string TwoColoredDyckPath::to_string() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(height(i));
        if (is_red(i)) out += 'r';
    }
    return out;
}

TwoColoredDyckPath TwoColoredDyckPath::parse(std::string_view text) {
    std::vector<int> heights;
    std::vector<bool> red;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string token(text.substr(0, comma));
        bool is_red = !token.empty() && (token.back() == 'r' || token.back() == 'R');
        if (is_red) token.pop_back();
        heights.push_back(parse_word(token).at(0));
        red.push_back(is_red);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return TwoColoredDyckPath(std::move(heights), std::move(red));
}

TwoColoredDyckPath outline_of(const InversionSequence& e) {
    if (!avoids_021(e)) throw ValidationError("outline: " + e.to_string() + " contains 021");
    std::vector<int> heights;
    std::vector<bool> red;
    int running_max = 0;
    for (int v : e.word()) {
        running_max = std::max(running_max, v);
        heights.push_back(v != 0 ? v : running_max);
        red.push_back(v == 0);
    }
    return TwoColoredDyckPath(std::move(heights), std::move(red));
}

InversionSequence invert_outline(const TwoColoredDyckPath& path) {
    if (!is_in_class(path, PathClass::A))
        throw ValidationError("path " + path.to_string() + " is not the outline of any 021-avoider");
    std::vector<int> e;
    for (int i = 1; i <= path.size(); ++i) e.push_back(path.is_red(i) ? 0 : path.height(i));
    return make_inversion_sequence_unchecked(std::move(e));
}

PositionSet c_set(const InversionSequence& e) {
    const int n = e.size();
    PositionSet out(n);
    for (int i = 1; i <= n; ++i) {
        if (e.at(i) != 0) continue;
        bool trapped = false;
        for (int a = 1; a < i && !trapped; ++a) {
            if (e.at(a) == 0) continue;
            for (int b = i + 1; b <= n && !trapped; ++b) trapped = e.at(b) == e.at(a);
        }
        if (trapped) out.insert(i);
    }
    return out;
}

PositionSet expo_set(const InversionSequence& e) {
    const auto path = outline_of(e);
    const auto trapped = c_set(e);
    const int n = e.size();
    PositionSet out(n);
    // i - d_i must be strictly below every later j - d_j.
    int suffix_min = n + 1;
    for (int i = n; i >= 1; --i) {
        int gap = i - path.height(i);
        if (!trapped.contains(i) && gap < suffix_min) out.insert(i);
        suffix_min = std::min(suffix_min, gap);
    }
    return out;
}

std::vector<DiagonalLine> lines_of(const TwoColoredDyckPath& path) {
    const int n = path.size();
    std::vector<DiagonalLine> lines;
    int max_offset = 0;
    for (int i = 1; i <= n; ++i) max_offset = std::max(max_offset, path.offset(i));
    // The unit piece of y = x - c over [i-1, i] lies in the region iff c <= offset(i);
    // a line is a maximal run of such pieces.
    for (int c = 0; c <= max_offset && n > 0; ++c) {
        int i = 1;
        while (i <= n) {
            if (path.offset(i) < c) {
                ++i;
                continue;
            }
            DiagonalLine line{c, i - 1, i, {}};
            while (i <= n && path.offset(i) >= c) {
                if (path.offset(i) == c) line.touched.push_back(i);
                line.x_hi = i;
                ++i;
            }
            if (!line.touched.empty()) lines.push_back(std::move(line));
        }
    }
    std::sort(lines.begin(), lines.end(),
              [](const DiagonalLine& a, const DiagonalLine& b) { return a.begin_step() < b.begin_step(); });
    return lines;
}

int turn(const TwoColoredDyckPath& path) {
    int turns = 0;
    for (int i = 1; i < path.size(); ++i)
        if (path.height(i + 1) > path.height(i)) ++turns;
    // The last east step is always followed by the closing north run; it
    // cancels the "minus one".
    return turns;
}

int segment(const TwoColoredDyckPath& path) {
    int count = 0;
    for (int i = 1; i <= path.size(); ++i) {
        if (path.is_red(i)) continue;
        bool continues = i > 1 && !path.is_red(i - 1) && path.height(i - 1) == path.height(i);
        if (!continues) ++count;
    }
    return count;
}

int red_count(const TwoColoredDyckPath& path) {
    return static_cast<int>(std::count(path.red().begin(), path.red().end(), true));
}

int return_count(const TwoColoredDyckPath& path) {
    const int n = path.size();
    if (n == 0) return 0;
    // (x, x) is visited iff the vertical run at abscissa x reaches height x.
    int count = 1;  // the endpoint (n, n)
    for (int x = 1; x < n; ++x)
        if (path.height(x + 1) == x) ++count;
    return count;
}

namespace {

bool first_of_positive_heights_black(const TwoColoredDyckPath& path) {
    for (int i = 1; i <= path.size(); ++i) {
        bool first_of_height = i == 1 || path.height(i - 1) != path.height(i);
        if (path.height(i) > 0 && first_of_height && path.is_red(i)) return false;
    }
    return true;
}

}  // namespace

bool is_in_class(const TwoColoredDyckPath& path, PathClass cls) {
    if (!first_of_positive_heights_black(path)) return false;
    switch (cls) {
        case PathClass::A:
            for (int i = 1; i <= path.size(); ++i)
                if (path.height(i) == 0 && !path.is_red(i)) return false;
            return true;
        case PathClass::B:
            return path.size() >= 1 && !path.is_red(1);
        case PathClass::R:
            return path.size() >= 1 && path.is_red(1);
    }
    return false;
}

std::vector<TwoColoredDyckPath> enumerate_paths(int n, PathClass cls) {
    std::vector<TwoColoredDyckPath> out;
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<int> heights;
    auto emit_colorings = [&] {
        std::vector<int> free;
        std::vector<bool> red(static_cast<std::size_t>(n), false);
        for (int i = 1; i <= n; ++i) {
            int h = heights[static_cast<std::size_t>(i - 1)];
            bool first_of_height = i == 1 || heights[static_cast<std::size_t>(i - 2)] != h;
            if (h > 0 && first_of_height) continue;  // forced black
            if (cls == PathClass::A && h == 0) {
                red[static_cast<std::size_t>(i - 1)] = true;
                continue;
            }
            if (i == 1) {
                red[0] = cls == PathClass::R;
                continue;
            }
            free.push_back(i - 1);
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
            for (std::size_t b = 0; b < free.size(); ++b) red[static_cast<std::size_t>(free[b])] = (mask >> b) & 1u;
            out.emplace_back(heights, red);
        }
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            emit_colorings();
            return;
        }
        int lo = heights.empty() ? 0 : heights.back();
        for (int h = lo; h <= i - 1; ++h) {
            heights.push_back(h);
            self(self, i + 1);
            heights.pop_back();
        }
    };
    if (n == 0) {
        if (cls == PathClass::A) out.emplace_back();
        return out;
    }
    rec(rec, 1);
    return out;
}

FirstReturn first_return_decompose(const TwoColoredDyckPath& path) {
    if (!is_in_class(path, PathClass::B))
        throw ValidationError("first-return decomposition needs a path in B_n: " + path.to_string());
    const int n = path.size();
    int k = n;
    for (int i = 1; i < n; ++i)
        if (path.height(i + 1) == i) {
            k = i;
            break;
        }
    std::vector<int> h1, h2;
    std::vector<bool> r1, r2;
    for (int i = 2; i <= k; ++i) {
        h1.push_back(path.height(i));
        r1.push_back(path.is_red(i));
    }
    for (int i = k + 1; i <= n; ++i) {
        h2.push_back(path.height(i) - k);
        r2.push_back(path.is_red(i));
    }
    return {TwoColoredDyckPath(std::move(h1), std::move(r1)), TwoColoredDyckPath(std::move(h2), std::move(r2)), k};
}

TwoColoredDyckPath recompose(const FirstReturn& parts) {
    if (parts.k != parts.first.size() + 1)
        throw ValidationError("recompose: k does not match the first component");
    std::vector<int> heights{0};
    std::vector<bool> red{false};
    for (int i = 1; i <= parts.first.size(); ++i) {
        heights.push_back(parts.first.height(i));
        red.push_back(parts.first.is_red(i));
    }
    for (int i = 1; i <= parts.rest.size(); ++i) {
        heights.push_back(parts.rest.height(i) + parts.k);
        red.push_back(parts.rest.is_red(i));
    }
    return TwoColoredDyckPath(std::move(heights), std::move(red));
}

}  // namespace schroder
