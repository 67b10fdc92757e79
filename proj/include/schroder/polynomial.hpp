#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace schroder {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent vector, one entry per variable of the owning polynomial.
using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with exact integer coefficients. Zero
/// coefficients are never stored, so two equal polynomials have equal maps.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> variables);

    static Polynomial constant(std::vector<std::string> variables, const BigInt& c);
    static Polynomial monomial(std::vector<std::string> variables, Exponents exps, const BigInt& c = 1);

    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t arity() const noexcept { return vars_.size(); }
    const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coefficient(const Exponents& exps) const;
    /// Sum of all coefficients.
    BigInt mass() const;
    /// Maximal exponent of a variable across all terms (0 for the zero polynomial).
    unsigned degree_in(std::size_t var) const;

    void add_term(const Exponents& exps, const BigInt& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const BigInt& c) const;

    /// Sets variable `var` to 1, keeping the arity (the exponent becomes 0).
    Polynomial substitute_one(std::size_t var) const;

    /// Coefficients c_0..c_d of a single-variable polynomial.
    std::vector<BigInt> univariate_coefficients() const;
    static Polynomial from_univariate(const std::string& var, const std::vector<BigInt>& coeffs);

    /// Human-readable form, e.g. "s*t*u*v^2 + u^2*v".
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void check_compatible(const Polynomial& other) const;

    std::vector<std::string> vars_;
    std::map<Exponents, BigInt> terms_;
};

}  // namespace schroder
