#include "schroder/bijections.hpp"

#include "schroder/outline.hpp"
#include "schroder/patterns.hpp"
#include "schroder/statistics.hpp"

#include <algorithm>

namespace schroder {

namespace {

const std::vector<Pattern>& psi_class_patterns() {
    static const std::vector<Pattern> pats{Pattern({2, 4, 1, 3}), Pattern({4, 2, 1, 3})};
    return pats;
}

// Transient state of one psi evaluation.
class Labeler {
public:
    explicit Labeler(TwoColoredDyckPath path)
        : path_(std::move(path)), n_(path_.size()), lines_(lines_of(path_)),
          line_of_step_(static_cast<std::size_t>(n_) + 1, -1), drawn_(lines_.size(), false),
          label_(static_cast<std::size_t>(n_) + 1, 0) {
        for (std::size_t l = 0; l < lines_.size(); ++l)
            for (int s : lines_[l].touched) line_of_step_[static_cast<std::size_t>(s)] = static_cast<int>(l);
    }

    std::vector<int> run() {
        enum class Proc { choose_new_line, same_height, walk_back, line_to_right };
        // Start: the diagonal is lines_[0]; label its highest step.
        drawn_[0] = true;
        int pos = assign(lines_[0].highest_step());
        Proc next = red(pos) ? Proc::choose_new_line : Proc::same_height;
        while (next_label_ <= n_) {
            switch (next) {
                case Proc::choose_new_line: {
                    int l = leftmost_new_line([this](const DiagonalLine& line) {
                        return std::any_of(line.touched.begin(), line.touched.end(),
                                           [this](int s) { return eligible(s); });
                    });
                    if (l < 0) stall("no drawable line");
                    drawn_[static_cast<std::size_t>(l)] = true;
                    int k = lines_[static_cast<std::size_t>(l)].highest_step();
                    if (!eligible(k)) stall("highest step of the new line is not labelable");
                    pos = assign(k);
                    next = red(pos) ? Proc::choose_new_line : Proc::same_height;
                    break;
                }
                case Proc::same_height: {
                    bool more = false;
                    for (int j = pos + 1; j <= n_ && !more; ++j)
                        more = !red(j) && path_.height(j) == path_.height(pos);
                    next = more ? Proc::line_to_right : Proc::walk_back;
                    break;
                }
                case Proc::walk_back: {
                    int cur = pos;
                    while (true) {
                        cur = step_southwest(cur);
                        if (cur < 1) stall("walked past the first step");
                        if (eligible(cur)) break;
                    }
                    pos = assign(cur);
                    next = red(pos) ? Proc::choose_new_line : Proc::same_height;
                    break;
                }
                case Proc::line_to_right: {
                    const int from = pos;
                    int l = leftmost_new_line([this, from](const DiagonalLine& line) {
                        return line.begin_step() > from &&
                               std::any_of(line.touched.begin(), line.touched.end(),
                                           [this](int s) { return !red(s); });
                    });
                    if (l < 0) stall("no line to the right");
                    drawn_[static_cast<std::size_t>(l)] = true;
                    int k = lines_[static_cast<std::size_t>(l)].highest_step();
                    if (label_[static_cast<std::size_t>(k)] != 0) stall("highest step already labeled");
                    pos = assign(k);
                    next = Proc::same_height;
                    break;
                }
            }
        }
        return {label_.begin() + 1, label_.end()};
    }

private:
    bool red(int s) const { return path_.is_red(s); }
    bool labeled(int s) const { return label_[static_cast<std::size_t>(s)] != 0; }

    // Rule (a): every red step to the left is labeled. Rule (b): once a step
    // left of E_i was labeled after E_i, everything left of E_i comes before
    // anything right of E_i.
    bool labelable(int s) const {
        if (labeled(s)) return false;
        if (red(s))
            for (int j = 1; j < s; ++j)
                if (red(j) && !labeled(j)) return false;
        for (int i = 1; i < s; ++i) {
            if (!labeled(i)) continue;
            bool jumped_back = false;
            for (int j = 1; j < i && !jumped_back; ++j) jumped_back = labeled(j) && label(j) > label(i);
            if (!jumped_back) continue;
            for (int j = 1; j < i; ++j)
                if (!labeled(j)) return false;
        }
        return true;
    }

    bool eligible(int s) const { return !labeled(s) && (!red(s) || labelable(s)); }

    int label(int s) const { return label_[static_cast<std::size_t>(s)]; }

    int assign(int s) {
        label_[static_cast<std::size_t>(s)] = next_label_++;
        return s;
    }

    // Along a drawn line to the nearest touched step strictly southwest, else
    // one step left along the path.
    int step_southwest(int cur) const {
        int l = line_of_step_[static_cast<std::size_t>(cur)];
        if (drawn_[static_cast<std::size_t>(l)]) {
            const auto& t = lines_[static_cast<std::size_t>(l)].touched;
            auto it = std::lower_bound(t.begin(), t.end(), cur);
            if (it != t.begin()) return *std::prev(it);
        }
        return cur - 1;
    }

    template <class Pred>
    int leftmost_new_line(Pred pred) const {
        for (std::size_t l = 0; l < lines_.size(); ++l)
            if (!drawn_[l] && pred(lines_[l])) return static_cast<int>(l);
        return -1;
    }

    [[noreturn]] void stall(const char* what) const {
        throw InternalInvariantError(std::string("psi: labeling stalled at label ") +
                                     std::to_string(next_label_) + " on " + path_.to_string() + ": " + what);
    }

    TwoColoredDyckPath path_;
    int n_;
    std::vector<DiagonalLine> lines_;
    std::vector<int> line_of_step_;
    std::vector<bool> drawn_;
    std::vector<int> label_;
    int next_label_ = 1;
};

struct DrawnLine {
    int x0;
    int y0;
    int offset() const { return x0 - y0; }
};

}  // namespace

Permutation psi(const InversionSequence& e) {
    if (!avoids_021(e)) throw ValidationError("psi: " + e.to_string() + " contains 021");
    if (e.empty()) return Permutation{};
    Labeler labeler(outline_of(e));
    return make_permutation_unchecked(labeler.run());
}

InversionSequence psi_inverse(const Permutation& p) {
    if (!avoids_all(p.word(), psi_class_patterns()))
        throw ValidationError("psi_inverse: " + p.to_string() + " contains 2413 or 4213");
    const int n = p.size();
    if (n == 0) return InversionSequence{};

    const auto lma = lma_set(p);
    const auto vid = vid_set(p);
    const auto bjp = big_jumps(p);
    std::vector<int> pos(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(p.at(i))] = i;
    auto at = [&pos](int label) { return pos[static_cast<std::size_t>(label)]; };

    constexpr int unknown = -1;
    std::vector<int> d(static_cast<std::size_t>(n) + 1, unknown);
    auto h = [&d](int step) -> int& { return d[static_cast<std::size_t>(step)]; };
    std::vector<DrawnLine> lines;

    // A drawn line runs from its start point to the right for as long as it
    // stays above the part of the path known so far; unknown heights are
    // bounded below by the known heights to their left.
    auto reaches = [&](const DrawnLine& line, int x) {
        if (x < line.x0) return false;
        int floor = 0;
        for (int k = 1; k <= line.x0; ++k)
            if (h(k) != unknown) floor = std::max(floor, h(k));
        for (int piece = line.x0 + 1; piece <= x; ++piece) {
            if (h(piece) != unknown) floor = std::max(floor, h(piece));
            if (piece - 1 - line.offset() < floor) return false;
        }
        return true;
    };

    auto height_fits = [&](int step, int value) {
        for (int k = 1; k < step; ++k)
            if (h(k) != unknown && h(k) > value) return false;
        for (int k = step + 1; k <= n; ++k)
            if (h(k) != unknown && h(k) < value) return false;
        return value <= step - 1;
    };

    auto fail = [&p](const std::string& what) {
        throw InternalInvariantError("psi_inverse: " + what + " on " + p.to_string());
    };

    enum class Proc { touch_drawn, branch, new_line, red_step };
    int label = 1;
    int j = at(1);
    lines.push_back({0, 0});
    h(j) = j - 1;
    ++label;
    Proc next = vid.contains(j) ? Proc::touch_drawn : Proc::branch;

    while (label <= n) {
        switch (next) {
            case Proc::touch_drawn: {
                j = at(label);
                // Heights are weakly increasing, so known neighbours bound d_j.
                int lo = 0, hi = j - 1;
                for (int k = 1; k < j; ++k)
                    if (h(k) != unknown) lo = std::max(lo, h(k));
                for (int k = j + 1; k <= n; ++k)
                    if (h(k) != unknown) hi = std::min(hi, h(k));
                int best = unknown;
                for (const auto& line : lines) {
                    if (!reaches(line, j - 1)) continue;
                    int cand = j - 1 - line.offset();
                    if (cand >= lo && cand <= hi && (best == unknown || cand < best)) best = cand;
                }
                if (best == unknown) fail("no drawn line reachable from step " + std::to_string(j));
                h(j) = best;
                ++label;
                next = vid.contains(j) ? Proc::touch_drawn : Proc::branch;
                break;
            }
            case Proc::branch:
                next = lma.contains(at(label)) ? Proc::red_step : Proc::new_line;
                break;
            case Proc::new_line: {
                int i = at(label - 1);
                j = at(label);
                int base = unknown;
                for (int k = i; k < j; ++k)
                    if (p.at(k) < label && h(k) != unknown) base = std::max(base, h(k));
                if (base == unknown) fail("empty height window before step " + std::to_string(j));
                int m = unknown;
                for (int cand = i + 1; cand <= j; ++cand) {
                    if (lma.contains(cand) && !bjp.contains(cand)) continue;
                    // The new line begins at step `cand`, so that step must sit at height `base`.
                    if (h(cand) != unknown ? h(cand) != base : !height_fits(cand, base)) continue;
                    bool taken = std::any_of(lines.begin(), lines.end(), [&](const DrawnLine& l) {
                        return cand - 1 - base == l.offset() && reaches(l, cand - 1);
                    });
                    if (!taken) {
                        m = cand;
                        break;
                    }
                }
                if (m == unknown) fail("no free start point for step " + std::to_string(j));
                lines.push_back({m - 1, base});
                h(j) = j - m + base;
                ++label;
                next = vid.contains(j) ? Proc::touch_drawn : Proc::branch;
                break;
            }
            case Proc::red_step: {
                j = at(label);
                int top = 0;
                for (int k = 1; k < j; ++k) top = std::max(top, h(k));
                h(j) = top;
                ++label;
                next = Proc::branch;
                break;
            }
        }
    }

    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i - 1)] = lma.contains(i) ? 0 : h(i);
    return InversionSequence(std::move(e));
}

PositionSet big_jumps(const Permutation& p) {
    PositionSet out(p.size());
    int prev = 0;
    for (int i : lma_set(p).members()) {
        if (prev != 0 && p.at(i) - prev > 1) out.insert(i);
        prev = p.at(i);
    }
    return out;
}

Permutation insert_tk(const Permutation& p, int k) {
    const int n = p.size() + 1;
    if (k < 1 || k > n)
        throw std::out_of_range("insert_tk: k = " + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int v : p.word()) w.push_back(v + (v >= k ? 1 : 0));
    w.push_back(k);
    return make_permutation_unchecked(std::move(w));
}

std::vector<int> ava(const Permutation& p) {
    std::vector<int> out;
    for (int k = p.size() + 1; k >= 1; --k)
        if (avoids_all(insert_tk(p, k).word(), psi_class_patterns())) out.push_back(k);
    return out;
}

namespace {

// Candidate last entries for Phi at length n, given the maximum m of the prefix:
// {0, m, m+1, ..., n-1} in increasing order.
std::vector<int> phi_values(int n, int m) {
    std::vector<int> out{0};
    for (int v = std::max(m, 1); v <= n - 1; ++v) out.push_back(v);
    return out;
}

// AVA(T_{k_j}(p)) from AVA(p) = {k_1 > k_2 > ...}: {n+1, k_j+1, k_j, k_{j+1}, ...}.
std::vector<int> next_ava(const std::vector<int>& current, std::size_t j, int new_size) {
    std::vector<int> out{new_size};
    if (current[j] + 1 != new_size) out.push_back(current[j] + 1);
    out.insert(out.end(), current.begin() + static_cast<std::ptrdiff_t>(j), current.end());
    return out;
}

}  // namespace

InversionSequence phi(const Permutation& p) {
    if (!avoids_all(p.word(), psi_class_patterns()))
        throw ValidationError("phi: " + p.to_string() + " contains 2413 or 4213");
    const int n = p.size();
    std::vector<int> e;
    std::vector<int> avail{1};
    int m = 0;
    for (int len = 1; len <= n; ++len) {
        // Rank of p_len among p_1..p_len is the inserted value of the standardized prefix.
        int k = 1;
        for (int i = 1; i < len; ++i)
            if (p.at(i) < p.at(len)) ++k;
        auto it = std::find(avail.begin(), avail.end(), k);
        if (it == avail.end()) throw InternalInvariantError("phi: inserted value not available");
        auto j = static_cast<std::size_t>(it - avail.begin());
        auto values = phi_values(len, m);
        if (j >= values.size()) throw InternalInvariantError("phi: more available values than entries");
        e.push_back(values[j]);
        m = std::max(m, values[j]);
        avail = next_ava(avail, j, len + 1);
    }
    return InversionSequence(std::move(e));
}

Permutation phi_inverse(const InversionSequence& e) {
    if (!avoids_021(e)) throw ValidationError("phi_inverse: " + e.to_string() + " contains 021");
    const int n = e.size();
    std::vector<int> word;
    std::vector<int> avail{1};
    int m = 0;
    for (int len = 1; len <= n; ++len) {
        auto values = phi_values(len, m);
        int v = e.at(len);
        auto it = std::find(values.begin(), values.end(), v);
        if (it == values.end()) throw InternalInvariantError("phi_inverse: entry out of range");
        auto j = static_cast<std::size_t>(it - values.begin());
        if (j >= avail.size()) throw InternalInvariantError("phi_inverse: not enough available values");
        int k = avail[j];
        for (int& w : word)
            if (w >= k) ++w;
        word.push_back(k);
        m = std::max(m, v);
        avail = next_ava(avail, j, len + 1);
    }
    return Permutation(std::move(word));
}

PsiTable::PsiTable(int n) : n_(n) {
    for (const auto& e : enumerate_021_avoiding(n)) {
        auto [it, inserted] = table_.try_emplace(psi(e), e);
        if (!inserted) injective_ = false;
    }
}

std::optional<InversionSequence> PsiTable::preimage(const Permutation& p) const {
    auto it = table_.find(p);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

}  // namespace schroder
