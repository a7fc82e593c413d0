#pragma once

#include <optional>
#include <string>

#include "bgforms/multipoly.hpp"

namespace bgforms {

/// Element of the field Q(beta, lambda, u) of rational functions in the three
/// formal parameters. Canonical form: gcd(num, den) = 1 and the denominator is
/// monic under the graded-lex order; equality is componentwise.
class ParamScalar {
  public:
    ParamScalar() : num_(), den_(1) {}
    ParamScalar(long c) : num_(c), den_(1) {}
    ParamScalar(const Rational& c) : num_(c), den_(1) {}
    explicit ParamScalar(const MultiPoly& p) : num_(p), den_(1) {}
    ParamScalar(const MultiPoly& num, const MultiPoly& den);

    static ParamScalar variable(Var v) { return ParamScalar(MultiPoly::variable(v)); }
    static ParamScalar beta() { return variable(Var::beta); }
    static ParamScalar lambda() { return variable(Var::lambda); }
    static ParamScalar u() { return variable(Var::u); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// True iff the value is a constant integer.
    bool is_integer() const {
        return is_constant() && is_polynomial() && num_.constant_value().is_integer();
    }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
    ParamScalar operator-() const;
    ParamScalar& operator+=(const ParamScalar& b) { return *this = *this + b; }
    ParamScalar& operator-=(const ParamScalar& b) { return *this = *this - b; }
    ParamScalar& operator*=(const ParamScalar& b) { return *this = *this * b; }
    ParamScalar& operator/=(const ParamScalar& b) { return *this = *this / b; }

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

    ParamScalar inverse() const;
    ParamScalar pow(long e) const;

    /// Substitute a value for one parameter; throws "division by zero" when the
    /// denominator vanishes identically under the substitution.
    ParamScalar substituted(Var v, const ParamScalar& value) const;

    /// Exact evaluation; nullopt when the point lies on the denominator's zero set.
    std::optional<Rational> eval(const std::array<Rational, 3>& point) const;

    /// Canonical text form with jointly integer-primitive numerator/denominator,
    /// e.g. "(beta^2-4)/(2*lambda)"; parses back bit-exactly (see textio).
    std::string str() const;

  private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& s);

/// Canonical gcd-reduced form (identity on the value; the canonical
/// representative is what changes). Errors on a zero denominator.
inline ParamScalar param_simplify(const ParamScalar& s) { return s; }

/// Pochhammer symbol (a)_m for integer m of either sign:
/// (a)_0 = 1, (a)_m = a(a+1)...(a+m-1) for m > 0 and
/// (a)_m = 1/[(a+m)(a+m+1)...(a-1)] for m < 0. Vanishing factors in the
/// negative-index case raise "pole of Pochhammer".
ParamScalar pochhammer(const ParamScalar& a, long m);

/// Substitute one parameter of a polynomial by a field element.
ParamScalar substitute_into_poly(const MultiPoly& p, Var v, const ParamScalar& value);

/// Binomial coefficient as a rational.
Rational binomial(unsigned long n, unsigned long k);

}  // namespace bgforms
