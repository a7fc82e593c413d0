#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "bgforms/param.hpp"

namespace bgforms {

/// Dense univariate polynomial in the abstract variable y with ParamScalar
/// coefficients. coefficient(k) is the coefficient of y^k; the trailing
/// coefficient is nonzero and the zero polynomial has an empty list.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(const ParamScalar& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    UniPoly(long c) : UniPoly(ParamScalar(c)) {}
    UniPoly(std::initializer_list<ParamScalar> ascending) : c_(ascending) { trim(); }

    static UniPoly y() { return monomial(1, ParamScalar(1)); }
    static UniPoly monomial(std::size_t k, const ParamScalar& coeff) {
        UniPoly p;
        if (coeff.is_zero()) return p;
        p.c_.assign(k + 1, ParamScalar());
        p.c_.back() = coeff;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    ParamScalar coefficient(std::size_t k) const {
        return k < c_.size() ? c_[k] : ParamScalar();
    }
    const ParamScalar& leading() const { return c_.back(); }
    const std::vector<ParamScalar>& coefficients() const { return c_; }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const ParamScalar& s, const UniPoly& p);
    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
    UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
    UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Horner evaluation; a ring homomorphism for fixed point.
    ParamScalar eval(const ParamScalar& point) const;
    /// Composition (*this) o inner.
    UniPoly compose(const UniPoly& inner) const;
    /// Multiply by y^k.
    UniPoly shifted_up(std::size_t k) const;
    /// Apply fn to every coefficient (used for parameter substitution).
    UniPoly mapped(const std::function<ParamScalar(const ParamScalar&)>& fn) const;
    UniPoly pow(unsigned e) const;

    std::string str(const std::string& var = "y") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<ParamScalar> c_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

}  // namespace bgforms
