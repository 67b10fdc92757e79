#include "schroder/polynomial.hpp"

#include <stdexcept>

namespace schroder {

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const BigInt& c) {
    Polynomial p(std::move(variables));
    p.add_term(Exponents(p.arity(), 0), c);
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponents exps, const BigInt& c) {
    Polynomial p(std::move(variables));
    p.add_term(exps, c);
    return p;
}

BigInt Polynomial::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Polynomial::mass() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

void Polynomial::add_term(const Exponents& exps, const BigInt& c) {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("Polynomial: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (vars_ != other.vars_) throw std::invalid_argument("Polynomial: variable sets differ");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (vars_.empty() && terms_.empty()) vars_ = other.vars_;
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (vars_.empty() && terms_.empty()) vars_ = other.vars_;
    check_compatible(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.vars_);
    Exponents sum(a.arity());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = ea[k] + eb[k];
            out.add_term(sum, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const BigInt& c) const {
    Polynomial out(vars_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
    return out;
}

Polynomial Polynomial::substitute_one(std::size_t var) const {
    if (var >= vars_.size()) throw std::out_of_range("Polynomial: no such variable");
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents reduced = e;
        reduced[var] = 0;
        out.add_term(reduced, c);
    }
    return out;
}

std::vector<BigInt> Polynomial::univariate_coefficients() const {
    if (vars_.size() != 1) throw std::invalid_argument("Polynomial: not univariate");
    std::vector<BigInt> out(is_zero() ? 0 : degree_in(0) + 1, BigInt(0));
    for (const auto& [e, c] : terms_) out[e[0]] = c;
    return out;
}

Polynomial Polynomial::from_univariate(const std::string& var, const std::vector<BigInt>& coeffs) {
    Polynomial p({var});
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term({static_cast<unsigned>(k)}, coeffs[k]);
    return p;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars_[k];
            if (e[k] > 1) mono += '^' + std::to_string(e[k]);
        }
        if (mono.empty())
            out += mag.str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.str() + '*' + mono;
    }
    return out;
}

}  // namespace schroder
