#include "bgforms/param.hpp"

#include <ostream>
#include <sstream>

namespace bgforms {

ParamScalar::ParamScalar(const MultiPoly& num, const MultiPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw_division_by_zero("rational function with zero denominator");
    if (!num_.is_zero() && !den_.is_one()) {
        MultiPoly g = MultiPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *MultiPoly::divide_exact(num_, g);
            den_ = *MultiPoly::divide_exact(den_, g);
        }
    }
    normalize();
}

void ParamScalar::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    const Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        const Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    ParamScalar r;
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = a.num_ + b.num_;
        r.den_ = MultiPoly(1);
        return r;
    }
    if (a.den_ == b.den_) {
        MultiPoly n = a.num_ + b.num_;
        if (n.is_zero()) return ParamScalar();
        return ParamScalar(n, a.den_);
    }
    // One denominator dividing the other is the common case in the series sums.
    if (const auto q = MultiPoly::divide_exact(b.den_, a.den_)) {
        MultiPoly n = a.num_ * (*q) + b.num_;
        if (n.is_zero()) return ParamScalar();
        const MultiPoly g = MultiPoly::gcd(n, a.den_);
        if (g.is_one()) {
            ParamScalar out;
            out.num_ = std::move(n);
            out.den_ = b.den_;
            out.normalize();
            return out;
        }
        return ParamScalar(*MultiPoly::divide_exact(n, g),
                           *MultiPoly::divide_exact(a.den_, g) * (*q));
    }
    if (const auto q = MultiPoly::divide_exact(a.den_, b.den_)) {
        MultiPoly n = b.num_ * (*q) + a.num_;
        if (n.is_zero()) return ParamScalar();
        const MultiPoly g = MultiPoly::gcd(n, b.den_);
        if (g.is_one()) {
            ParamScalar out;
            out.num_ = std::move(n);
            out.den_ = a.den_;
            out.normalize();
            return out;
        }
        return ParamScalar(*MultiPoly::divide_exact(n, g),
                           *MultiPoly::divide_exact(b.den_, g) * (*q));
    }
    // Henrici: with reduced inputs only gcd(den, den) and gcd(num, g0) can cancel.
    const MultiPoly g0 = MultiPoly::gcd(a.den_, b.den_);
    if (g0.is_one()) {
        r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
        r.den_ = a.den_ * b.den_;
        r.normalize();
        if (r.num_.is_zero()) r.den_ = MultiPoly(1);
        return r;
    }
    const MultiPoly bp = *MultiPoly::divide_exact(a.den_, g0);
    const MultiPoly dp = *MultiPoly::divide_exact(b.den_, g0);
    MultiPoly n = a.num_ * dp + b.num_ * bp;
    if (n.is_zero()) return ParamScalar();
    const MultiPoly g1 = MultiPoly::gcd(n, g0);
    if (!g1.is_one()) {
        n = *MultiPoly::divide_exact(n, g1);
        r.den_ = (*MultiPoly::divide_exact(g0, g1)) * bp * dp;
    } else {
        r.den_ = g0 * bp * dp;
    }
    r.num_ = std::move(n);
    r.normalize();
    return r;
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    if (a.is_zero() || b.is_zero()) return ParamScalar();
    ParamScalar r;
    if (a.den_.is_one() && b.den_.is_one()) {
        r.num_ = a.num_ * b.num_;
        r.den_ = MultiPoly(1);
        return r;
    }
    // Cross-cancel before multiplying; inputs are reduced, so the result is too.
    MultiPoly an = a.num_, bd = b.den_;
    MultiPoly g1 = MultiPoly::gcd(an, bd);
    if (!g1.is_one()) {
        an = *MultiPoly::divide_exact(an, g1);
        bd = *MultiPoly::divide_exact(bd, g1);
    }
    MultiPoly bn = b.num_, ad = a.den_;
    MultiPoly g2 = MultiPoly::gcd(bn, ad);
    if (!g2.is_one()) {
        bn = *MultiPoly::divide_exact(bn, g2);
        ad = *MultiPoly::divide_exact(ad, g2);
    }
    r.num_ = an * bn;
    r.den_ = ad * bd;
    r.normalize();
    return r;
}

ParamScalar ParamScalar::inverse() const {
    if (is_zero()) throw_division_by_zero("inverse of zero rational function");
    ParamScalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) { return a * b.inverse(); }

ParamScalar ParamScalar::pow(long e) const {
    if (e == 0) return ParamScalar(1);
    const ParamScalar base = e < 0 ? inverse() : *this;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    ParamScalar r;
    r.num_ = base.num_.pow(static_cast<unsigned>(n));
    r.den_ = base.den_.pow(static_cast<unsigned>(n));
    r.normalize();
    return r;
}

ParamScalar substitute_into_poly(const MultiPoly& p, Var v, const ParamScalar& value) {
    if (p.degree(v) <= 0) return ParamScalar(p);
    const auto coeffs = p.coefficients_in(v);
    ParamScalar acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * value + ParamScalar(*it);
    return acc;
}

ParamScalar ParamScalar::substituted(Var v, const ParamScalar& value) const {
    const ParamScalar n = substitute_into_poly(num_, v, value);
    const ParamScalar d = substitute_into_poly(den_, v, value);
    if (d.is_zero())
        throw_division_by_zero("substitution lies on the denominator's zero set");
    return n / d;
}

std::optional<Rational> ParamScalar::eval(const std::array<Rational, 3>& point) const {
    const Rational d = den_.eval(point);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(point) / d;
}

std::string ParamScalar::str() const {
    if (is_zero()) return "0";
    const auto [cn, pn] = num_.primitive_parts();
    const auto [cd, pd] = den_.primitive_parts();
    const Rational ratio = cn / cd;  // reduced; denominator positive
    const MultiPoly ni = pn * Rational(ratio.numerator(), Integer(1));
    const MultiPoly di = pd * Rational(ratio.denominator(), Integer(1));
    if (di.is_one()) return ni.str();
    std::ostringstream os;
    const bool wrap_num = ni.term_count() > 1;
    const bool wrap_den = di.term_count() > 1 || !(di.leading_coefficient().is_one() &&
                                                   di.leading_monomial().total() <= 1);
    if (wrap_num)
        os << "(" << ni.str() << ")";
    else
        os << ni.str();
    os << "/";
    if (wrap_den)
        os << "(" << di.str() << ")";
    else
        os << di.str();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.str(); }

ParamScalar pochhammer(const ParamScalar& a, long m) {
    if (m == 0) return ParamScalar(1);
    if (m > 0) {
        ParamScalar r(1);
        for (long i = 0; i < m; ++i) r *= a + ParamScalar(i);
        return r;
    }
    ParamScalar r(1);
    for (long i = 1; i <= -m; ++i) {
        const ParamScalar f = a - ParamScalar(i);
        if (f.is_zero())
            throw AlgebraError(AlgebraError::Kind::pochhammer_pole,
                               "pole of Pochhammer: vanishing factor at negative index");
        r *= f;
    }
    return r.inverse();
}

Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    return Rational(Integer::binomial(n, k), Integer(1));
}

}  // namespace bgforms
