#include "schroder/statistics.hpp"

#include <algorithm>

namespace schroder {

PositionSet des_set(const Permutation& p) {
    const int n = p.size();
    PositionSet out(n);
    for (int i = 1; i < n; ++i)
        if (p.at(i) > p.at(i + 1)) out.insert(i);
    return out;
}

PositionSet vid_set(const Permutation& p) {
    const int n = p.size();
    std::vector<int> pos(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(p.at(i))] = i;
    PositionSet out(n);
    for (int i = 2; i <= n; ++i) {
        int next = p.at(i) + 1;
        if (next <= n && pos[static_cast<std::size_t>(next)] < i) out.insert(i);
    }
    return out;
}

PositionSet lma_set(const Permutation& p) {
    PositionSet out(p.size());
    int best = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) > best) {
            best = p.at(i);
            out.insert(i);
        }
    return out;
}

PositionSet lmi_set(const Permutation& p) {
    PositionSet out(p.size());
    int best = p.size() + 1;
    for (int i = 1; i <= p.size(); ++i)
        if (p.at(i) < best) {
            best = p.at(i);
            out.insert(i);
        }
    return out;
}

PositionSet rma_set(const Permutation& p) {
    PositionSet out(p.size());
    int best = 0;
    for (int i = p.size(); i >= 1; --i)
        if (p.at(i) > best) {
            best = p.at(i);
            out.insert(i);
        }
    return out;
}

PositionSet rmi_set(const Permutation& p) {
    PositionSet out(p.size());
    int best = p.size() + 1;
    for (int i = p.size(); i >= 1; --i)
        if (p.at(i) < best) {
            best = p.at(i);
            out.insert(i);
        }
    return out;
}

PositionSet asc_set(const InversionSequence& e) {
    const int n = e.size();
    PositionSet out(n);
    for (int i = 1; i < n; ++i)
        if (e.at(i) < e.at(i + 1)) out.insert(i);
    return out;
}

PositionSet dist_set(const InversionSequence& e) {
    const int n = e.size();
    PositionSet out(n);
    std::vector<bool> seen_later(static_cast<std::size_t>(n) + 1, false);
    for (int i = n; i >= 2; --i) {
        int v = e.at(i);
        if (v != 0 && !seen_later[static_cast<std::size_t>(v)]) out.insert(i);
        seen_later[static_cast<std::size_t>(v)] = true;
    }
    return out;
}

PositionSet zero_set(const InversionSequence& e) {
    PositionSet out(e.size());
    for (int i = 1; i <= e.size(); ++i)
        if (e.at(i) == 0) out.insert(i);
    return out;
}

PositionSet ema_set(const InversionSequence& e) {
    PositionSet out(e.size());
    for (int i = 1; i <= e.size(); ++i)
        if (e.at(i) == i - 1) out.insert(i);
    return out;
}

PositionSet rmi_seq_set(const InversionSequence& e) {
    PositionSet out(e.size());
    int best = e.size() + 1;
    for (int i = e.size(); i >= 1; --i)
        if (e.at(i) < best) {
            best = e.at(i);
            out.insert(i);
        }
    return out;
}

std::string StatTuple::encode() const {
    std::string out;
    out.push_back(static_cast<char>(sets.size()));
    for (const auto& s : sets) s.append_bytes(out);
    out.push_back(static_cast<char>(numbers.size()));
    for (int v : numbers) {
        auto u = static_cast<std::uint32_t>(v) ^ 0x80000000u;
        for (int b = 3; b >= 0; --b) out.push_back(static_cast<char>((u >> (8 * b)) & 0xff));
    }
    return out;
}

std::string StatTuple::to_string() const {
    std::string out = "(";
    bool first = true;
    for (const auto& s : sets) {
        if (!first) out += ", ";
        out += s.to_string();
        first = false;
    }
    for (int v : numbers) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    return out + ")";
}

void TupleMultiset::add(const StatTuple& tuple, std::uint64_t multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = entries_.try_emplace(tuple.encode(), Entry{tuple, 0});
    it->second.count += multiplicity;
    total_ += multiplicity;
}

void TupleMultiset::merge(const TupleMultiset& other) {
    for (const auto& [key, entry] : other.entries_) {
        auto [it, inserted] = entries_.try_emplace(key, Entry{entry.tuple, 0});
        it->second.count += entry.count;
    }
    total_ += other.total_;
}

std::uint64_t TupleMultiset::multiplicity(const StatTuple& tuple) const {
    auto it = entries_.find(tuple.encode());
    return it == entries_.end() ? 0 : it->second.count;
}

EquidistributionReport equidistributed(const TupleMultiset& lhs, const TupleMultiset& rhs) {
    EquidistributionReport report;
    auto a = lhs.entries().begin(), a_end = lhs.entries().end();
    auto b = rhs.entries().begin(), b_end = rhs.entries().end();
    auto fail = [&report](const StatTuple& t, std::uint64_t l, std::uint64_t r) {
        report.equal = false;
        report.witness = t;
        report.lhs_multiplicity = l;
        report.rhs_multiplicity = r;
        return report;
    };
    while (a != a_end || b != b_end) {
        if (b == b_end || (a != a_end && a->first < b->first)) return fail(a->second.tuple, a->second.count, 0);
        if (a == a_end || b->first < a->first) return fail(b->second.tuple, 0, b->second.count);
        if (a->second.count != b->second.count)
            return fail(a->second.tuple, a->second.count, b->second.count);
        ++a;
        ++b;
    }
    return report;
}

EquidistributionReport equidistributed(const std::vector<StatTuple>& lhs,
                                       const std::vector<StatTuple>& rhs) {
    TupleMultiset l, r;
    for (const auto& t : lhs) l.add(t);
    for (const auto& t : rhs) r.add(t);
    return equidistributed(l, r);
}

namespace {

std::vector<BigInt> binomial_row(int m) {
    std::vector<BigInt> row{1};
    for (int k = 0; k < m; ++k) {
        std::vector<BigInt> next(row.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < row.size(); ++i) {
            next[i] += row[i];
            next[i + 1] += row[i];
        }
        row = std::move(next);
    }
    return row;
}

void trim(std::vector<BigInt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

std::vector<BigInt> gamma_expand(const std::vector<BigInt>& gamma, int n) {
    std::vector<BigInt> out(static_cast<std::size_t>(std::max(n, 1)), BigInt(0));
    for (std::size_t k = 0; k < gamma.size(); ++k) {
        int m = n - 1 - 2 * static_cast<int>(k);
        if (m < 0) throw std::invalid_argument("gamma_expand: too many coefficients");
        auto row = binomial_row(m);
        for (std::size_t i = 0; i < row.size(); ++i) out[k + i] += gamma[k] * row[i];
    }
    trim(out);
    return out;
}

GammaDecomposition gamma_decompose(const std::vector<BigInt>& coefficients, int n) {
    if (n < 1) throw std::invalid_argument("gamma_decompose: n must be at least 1");
    GammaDecomposition out;
    std::vector<BigInt> rest = coefficients;
    trim(rest);
    if (static_cast<int>(rest.size()) > n) {
        out.residual = rest;
        out.diagnostic = "degree exceeds n-1";
        return out;
    }
    rest.resize(static_cast<std::size_t>(n), BigInt(0));
    for (int k = 0; 2 * k <= n - 1; ++k) {
        BigInt g = rest[static_cast<std::size_t>(k)];
        out.gamma.push_back(g);
        if (g < 0) {
            trim(rest);
            out.residual = rest;
            out.diagnostic = "gamma_" + std::to_string(k) + " = " + g.str() + " is negative";
            return out;
        }
        auto row = binomial_row(n - 1 - 2 * k);
        for (std::size_t i = 0; i < row.size(); ++i) rest[static_cast<std::size_t>(k) + i] -= g * row[i];
    }
    trim(rest);
    out.residual = rest;
    if (!rest.empty()) {
        out.diagnostic = "not palindromic: a remainder survives the expansion";
        return out;
    }
    out.ok = true;
    return out;
}

GammaDecomposition gamma_decompose(const Polynomial& poly, int n) {
    return gamma_decompose(poly.univariate_coefficients(), n);
}

}  // namespace schroder
