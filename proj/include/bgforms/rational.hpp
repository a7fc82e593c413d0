#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

#include "bgforms/error.hpp"

namespace bgforms {

/// Arbitrary-precision integer, a value-semantic RAII wrapper around mpz_t.
class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); }
    Integer(int v) : Integer(static_cast<long>(v)) {}
    explicit Integer(const std::string& decimal) {
        if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw AlgebraError(AlgebraError::Kind::invalid_argument,
                               "invalid integer literal: " + decimal);
        }
    }
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    friend Integer operator+(const Integer& a, const Integer& b) {
        Integer r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        Integer r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        Integer r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    Integer operator-() const {
        Integer r;
        mpz_neg(r.z_, z_);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
    friend bool operator<(const Integer& a, const Integer& b) { return mpz_cmp(a.z_, b.z_) < 0; }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }

    static Integer gcd(const Integer& a, const Integer& b) {
        Integer r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    static Integer lcm(const Integer& a, const Integer& b) {
        Integer r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }
    static Integer factorial(unsigned long n) {
        Integer r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    static Integer binomial(unsigned long n, unsigned long k) {
        Integer r;
        mpz_bin_uiui(r.z_, n, k);
        return r;
    }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

  private:
    mpz_t z_;
};

/// Exact rational scalar; the ground field of everything in this library.
/// Invariants: gcd(|num|, den) = 1 and den > 0, kept canonical by GMP.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(int v) : Rational(static_cast<long>(v)) {}
    Rational(long num, long den) {
        if (den == 0) throw_division_by_zero("rational from integers");
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rational(const Integer& num, const Integer& den) {
        if (den.is_zero()) throw_division_by_zero("rational from integers");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw_division_by_zero("rational division");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& b) {
        mpq_add(q_, q_, b.q_);
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        mpq_sub(q_, q_, b.q_);
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        mpq_mul(q_, q_, b.q_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational inverse() const {
        if (is_zero()) throw_division_by_zero("rational inverse");
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        Rational base = e < 0 ? inverse() : *this;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
        return r;
    }

    Integer numerator() const {
        Integer n;
        mpz_set(n.raw(), mpq_numref(q_));
        return n;
    }
    Integer denominator() const {
        Integer d;
        mpz_set(d.raw(), mpq_denref(q_));
        return d;
    }

    /// True iff the value is an integer (denominator 1).
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }
    /// Integer value when is_integer() and it fits a long.
    long to_long() const { return mpz_get_si(mpq_numref(q_)); }

    std::string str() const;

  private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Reduced, positive-denominator representative of n/d; throws "division by zero" when d = 0.
Rational rational_normalize(const Integer& n, const Integer& d);
inline Rational rational_normalize(long n, long d) { return rational_normalize(Integer(n), Integer(d)); }

}  // namespace bgforms
