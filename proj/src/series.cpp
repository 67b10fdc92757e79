#include "schroder/series.hpp"

#include "schroder/patterns.hpp"
#include "schroder/statistics.hpp"

#include <stdexcept>

namespace schroder {

const std::vector<std::string>& TruncatedSeries::variables() {
    static const std::vector<std::string> vars{"s", "t", "u", "v"};
    return vars;
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Polynomial(variables()));
}

TruncatedSeries TruncatedSeries::term(int order, int k, const Exponents& exps, const BigInt& c) {
    TruncatedSeries out(order);
    if (k <= order) out.coeffs_[static_cast<std::size_t>(k)].add_term(exps, c);
    return out;
}

TruncatedSeries TruncatedSeries::constant(int order, const BigInt& c) {
    return term(order, 0, Exponents(4, 0), c);
}

void TruncatedSeries::set_coefficient(int k, Polynomial p) {
    if (p.variables() != variables()) throw std::invalid_argument("TruncatedSeries: coefficient ring mismatch");
    coeffs_.at(static_cast<std::size_t>(k)) = std::move(p);
}

void TruncatedSeries::check_order(const TruncatedSeries& other) const {
    if (order_ != other.order_)
        throw std::invalid_argument("TruncatedSeries: order mismatch (" + std::to_string(order_) + " vs " +
                                    std::to_string(other.order_) + ")");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    check_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    check_order(other);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_order(b);
    TruncatedSeries out(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j) {
            const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
            if (!bj.is_zero()) out.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::substitute_one(Var var) const {
    TruncatedSeries out(order_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k].substitute_one(var);
    return out;
}

bool TruncatedSeries::is_zero() const { return !lowest_nonzero(); }

std::optional<int> TruncatedSeries::lowest_nonzero() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return std::nullopt;
}

namespace {

TruncatedSeries mono(int order, int k, unsigned s, unsigned t, unsigned u, unsigned v, const BigInt& c = 1) {
    return TruncatedSeries::term(order, k, {s, t, u, v}, c);
}

}  // namespace

GsSolution solve_gs_system(int order, int extra_rounds) {
    if (order < 1) throw std::invalid_argument("solve_gs_system: order must be at least 1");
    const auto one = TruncatedSeries::constant(order, 1);
    const auto uvz = mono(order, 1, 0, 0, 1, 1);
    const auto vz = mono(order, 1, 0, 0, 0, 1);
    const auto t = mono(order, 0, 0, 1, 0, 0);
    const auto s = mono(order, 0, 1, 0, 0, 0);

    GsSolution cur{TruncatedSeries(order), TruncatedSeries(order), TruncatedSeries(order)};
    for (int round = 0; round < order + extra_rounds; ++round) {
        const auto S1 = cur.S.substitute_v1();
        const auto B1 = cur.B.substitute_v1();
        const auto R1 = cur.R.substitute_v1();
        const auto tail = one + s * cur.B;
        GsSolution next{uvz * (one + S1) * tail,
                        vz * (t + t * R1 + B1) * tail,
                        uvz * (one + R1 + B1) * tail};
        cur = std::move(next);
    }
    return cur;
}

std::vector<IdentityCheck> verify_cubic(const TruncatedSeries& S_st) {
    const int N = S_st.order();
    const auto one = TruncatedSeries::constant(N, 1);
    const auto z = mono(N, 1, 0, 0, 0, 0);
    const auto s = mono(N, 0, 1, 0, 0, 0);
    const auto t = mono(N, 0, 0, 1, 0, 0);
    const auto two = TruncatedSeries::constant(N, 2);

    auto check = [](std::string name, const TruncatedSeries& residual) {
        IdentityCheck out{std::move(name), residual.is_zero(), residual.lowest_nonzero()};
        return out;
    };

    std::vector<IdentityCheck> out;
    {
        const auto& S = S_st;
        const auto S2 = S * S;
        const auto rhs = t * (z * (s - one) + one) * S2 * S + t * z * (two * s - one) * S2 +
                         z * (t * s + one) * S + z;
        out.push_back(check("cubic", S - rhs));
    }
    {
        const auto S = S_st.substitute_one(TruncatedSeries::s);
        const auto S2 = S * S;
        const auto rhs = t * S2 * S + t * z * S2 + z * (t + one) * S + z;
        out.push_back(check("s=1", S - rhs));
    }
    {
        const auto S = S_st.substitute_one(TruncatedSeries::t);
        const auto rhs = (s * z - z + one) * S * S + s * z * S + z;
        out.push_back(check("t=1", S - rhs));
    }
    return out;
}

TruncatedSeries series_from_enumeration(int n_max) {
    TruncatedSeries out(n_max);
    using Stat = NumericStat<InversionSequence>;
    const std::vector<Stat> stats{
        {"s", [](const InversionSequence& e) { return dist(e); }},
        {"t", [](const InversionSequence& e) { return asc(e); }},
        {"u", [](const InversionSequence& e) { return zero_set(e).size(); }},
        {"v", [](const InversionSequence& e) { return ema_set(e).size(); }},
    };
    for (int n = 1; n <= n_max; ++n) out.set_coefficient(n, distribution(enumerate_021_avoiding(n), stats));
    return out;
}

std::vector<std::string> schroder_paths(int n) {
    if (n < 0) throw std::invalid_argument("schroder_paths: negative size");
    std::vector<std::string> out;
    std::string word;
    // width counts half-units: U and D take 1, F takes 2, total 2n.
    auto rec = [&](auto&& self, int width, int height) -> void {
        if (width == 2 * n) {
            if (height == 0) out.push_back(word);
            return;
        }
        const int left = 2 * n - width;
        if (height + 1 <= left - 1) {
            word.push_back('U');
            self(self, width + 1, height + 1);
            word.pop_back();
        }
        if (height > 0) {
            word.push_back('D');
            self(self, width + 1, height - 1);
            word.pop_back();
        }
        if (left >= 2 + height) {
            word.push_back('F');
            self(self, width + 2, height);
            word.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

int ascents(const std::string& path) {
    int count = 0;
    for (std::size_t i = 0; i < path.size(); ++i)
        if (path[i] == 'U' && (i == 0 || path[i - 1] != 'U')) ++count;
    return count;
}

Polynomial schroder_asc_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("schroder_asc_polynomial: n must be at least 1");
    Polynomial out({"s"});
    for (const auto& path : schroder_paths(n - 1))
        out.add_term({static_cast<unsigned>(ascents(path))}, 1);
    return out;
}

}  // namespace schroder
