#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgforms/rational.hpp"

namespace bgforms {

/// The three formal parameters of the coefficient field Q(beta, lambda, u).
enum class Var : int { beta = 0, lambda = 1, u = 2 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::beta: return "beta";
        case Var::lambda: return "lambda";
        case Var::u: return "u";
    }
    return "?";
}

/// Exponent vector of a monomial beta^a * lambda^b * u^c.
struct Monomial {
    std::array<std::uint32_t, 3> e{0, 0, 0};

    std::uint32_t total() const { return e[0] + e[1] + e[2]; }
    bool is_constant() const { return total() == 0; }
    bool divides(const Monomial& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
    }
    /// Componentwise difference; caller guarantees divisibility.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        return Monomial{{a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2]}};
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Graded lexicographic order with beta > lambda > u, descending
/// (map iteration starts at the leading monomial).
struct MonomialGradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.e > b.e;  // lexicographic on (beta, lambda, u)
    }
};

/// Sparse multivariate polynomial in (beta, lambda, u) over Rational.
/// The term map never stores zero coefficients.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialGradedLexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(Var v, std::uint32_t power = 1) {
        MultiPoly p;
        if (power == 0) return MultiPoly(1);
        Monomial m;
        m.e[static_cast<int>(v)] = power;
        p.terms_[m] = Rational(1);
        return p;
    }
    static MultiPoly term(const Monomial& m, const Rational& c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }
    bool is_one() const { return is_constant() && !is_zero() && terms_.begin()->second.is_one(); }

    /// Constant term (zero if absent).
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    int degree(Var v) const;
    int total_degree() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& b);
    MultiPoly& operator-=(const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& b) {
        *this = *this * b;
        return *this;
    }
    friend MultiPoly operator*(const MultiPoly& a, const Rational& c);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;

    /// Exact evaluation at a rational point (beta, lambda, u).
    Rational eval(const std::array<Rational, 3>& point) const;

    /// View as univariate in v: result[k] = coefficient polynomial of v^k.
    std::vector<MultiPoly> coefficients_in(Var v) const;
    /// Inverse of coefficients_in.
    static MultiPoly from_coefficients_in(Var v, const std::vector<MultiPoly>& coeffs);

    /// Substitute a polynomial for one variable (used for residues at lambda = beta/2 - N,
    /// u -> 0 specializations, beta -> n-2p).
    MultiPoly substituted(Var v, const MultiPoly& value) const;

    /// Quotient when b divides exactly; nullopt otherwise.
    static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

    /// Gcd up to a rational unit; result is integer-primitive with positive
    /// leading coefficient (deterministic representative), 1 for coprime input.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
    static MultiPoly lcm(const MultiPoly& a, const MultiPoly& b);

    /// Rational c and integer-primitive P with *this = c * P, P leading coeff > 0.
    std::pair<Rational, MultiPoly> primitive_parts() const;

    /// Canonical text form: graded-lex descending terms, e.g. "beta^2*lambda-4*u+3/2".
    std::string str() const;

  private:
    void prune(TermMap::iterator it) {
        if (it->second.is_zero()) terms_.erase(it);
    }

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace bgforms
