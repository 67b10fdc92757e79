#pragma once

#include "schroder/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schroder {

/// Power series in z truncated after z^N, coefficients in Z[s,t,u,v].
class TruncatedSeries {
public:
    static const std::vector<std::string>& variables();
    enum Var : std::size_t { s = 0, t = 1, u = 2, v = 3 };

    explicit TruncatedSeries(int order);

    /// c * z^k for a monomial s^a t^b u^c v^d.
    static TruncatedSeries term(int order, int k, const Exponents& exps, const BigInt& c = 1);
    static TruncatedSeries constant(int order, const BigInt& c);

    int order() const noexcept { return order_; }
    const Polynomial& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    void set_coefficient(int k, Polynomial p);

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /// Sets one variable to 1 in every coefficient.
    TruncatedSeries substitute_one(Var var) const;
    TruncatedSeries substitute_v1() const { return substitute_one(v); }

    bool is_zero() const;
    /// Smallest k with a nonzero coefficient.
    std::optional<int> lowest_nonzero() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check_order(const TruncatedSeries& other) const;

    int order_;
    std::vector<Polynomial> coeffs_;
};

struct GsSolution {
    TruncatedSeries S, B, R;
};

/// Fixed point of
///   S = uvz (1 + S|v=1)(1 + sB)
///   B = vz (t + t R|v=1 + B|v=1)(1 + sB)
///   R = uvz (1 + R|v=1 + B|v=1)(1 + sB)
/// iterated from zero. `extra_rounds` runs past the N rounds that suffice.
GsSolution solve_gs_system(int order, int extra_rounds = 0);

struct IdentityCheck {
    std::string name;
    bool holds = true;
    std::optional<int> first_failing_order;
};

/// The cubic for S(s,t;z) and its t=1 and s=1 specializations. Expects S with
/// u = v = 1 already substituted.
std::vector<IdentityCheck> verify_cubic(const TruncatedSeries& S_st);

/// z^n coefficient = sum over I_n(021) of s^dist t^asc u^zero v^ema.
TruncatedSeries series_from_enumeration(int n_max);

/// Schroder n-paths as words over U, D, F.
std::vector<std::string> schroder_paths(int n);
/// Maximal runs of U steps.
int ascents(const std::string& path);
/// sum of s^asc over Schroder (n-1)-paths.
Polynomial schroder_asc_polynomial(int n);

}  // namespace schroder
