#pragma once

#include "bgforms/unipoly.hpp"

namespace bgforms {

/// Slots at which the sum families get evaluated inside solution operators:
/// (1/u)·delta d + (beta/2)(beta/2+1), (1/u)·delta d + (beta/2)(beta/2-1) and
/// (1/u)·d delta + (beta/2)(beta/2+1) respectively.
enum class Slot { y_minus, y_plus, y_one };

/// Normal-form element of the unital algebra generated by d and delta over
/// Q(beta, lambda, u), subject to d^2 = 0 and delta^2 = 0. With x := delta∘d
/// and z := d∘delta the normal form is
///
///     scalar + P(x) + Q(z) + c(x)·delta + e(z)·d,
///
/// where P, Q have zero constant term (the scalar is stored once). Every
/// element has a unique such representation, so equality is componentwise.
/// Multiplication uses x·z = z·x = 0, delta·x = 0, d·z = 0 and the
/// push-through rules delta·z^k = x^k·delta, d·x^k = z^k·d.
class FormOperator {
  public:
    FormOperator() = default;
    FormOperator(const ParamScalar& s) : scalar_(s) {}
    FormOperator(long s) : scalar_(ParamScalar(s)) {}

    static FormOperator zero() { return FormOperator(); }
    static FormOperator one() { return FormOperator(1); }
    static FormOperator x(std::size_t power = 1);          // (delta d)^power
    static FormOperator z(std::size_t power = 1);          // (d delta)^power
    static FormOperator d();
    static FormOperator delta();
    /// c(x)·delta and e(z)·d with arbitrary coefficient polynomials.
    static FormOperator delta_times(const UniPoly& c);
    static FormOperator d_times(const UniPoly& e);
    /// scalar + P from a full polynomial in x (or z) including its constant.
    static FormOperator from_x_polynomial(const UniPoly& full);
    static FormOperator from_z_polynomial(const UniPoly& full);
    static FormOperator from_parts(const ParamScalar& scalar, const UniPoly& x_part,
                                   const UniPoly& z_part, const UniPoly& delta_part,
                                   const UniPoly& d_part);

    const ParamScalar& scalar() const { return scalar_; }
    const UniPoly& x_part() const { return x_; }
    const UniPoly& z_part() const { return z_; }
    const UniPoly& delta_part() const { return delta_; }
    const UniPoly& d_part() const { return d_; }

    /// scalar + P(x) resp. scalar + Q(z) as univariate polynomials.
    UniPoly x_full() const { return x_ + UniPoly(scalar_); }
    UniPoly z_full() const { return z_ + UniPoly(scalar_); }

    bool is_zero() const {
        return scalar_.is_zero() && x_.is_zero() && z_.is_zero() && delta_.is_zero() && d_.is_zero();
    }
    /// Degree-preserving part only (no delta/d components)?
    bool is_degree_preserving() const { return delta_.is_zero() && d_.is_zero(); }

    friend FormOperator operator+(const FormOperator& a, const FormOperator& b);
    friend FormOperator operator-(const FormOperator& a, const FormOperator& b);
    friend FormOperator operator*(const FormOperator& a, const FormOperator& b);
    friend FormOperator operator*(const ParamScalar& s, const FormOperator& a);
    FormOperator operator-() const;
    FormOperator& operator+=(const FormOperator& b) { return *this = *this + b; }
    FormOperator& operator-=(const FormOperator& b) { return *this = *this - b; }
    FormOperator& operator*=(const FormOperator& b) { return *this = *this * b; }

    friend bool operator==(const FormOperator& a, const FormOperator& b) {
        return a.scalar_ == b.scalar_ && a.x_ == b.x_ && a.z_ == b.z_ && a.delta_ == b.delta_ &&
               a.d_ == b.d_;
    }
    friend bool operator!=(const FormOperator& a, const FormOperator& b) { return !(a == b); }

    FormOperator pow(unsigned e) const;

    /// Substitute a parameter in every coefficient.
    FormOperator substituted(Var v, const ParamScalar& value) const;

    /// Largest power of u appearing across all coefficient numerators
    /// (coefficients must be polynomial in u for this to be meaningful).
    int u_degree() const;

  private:
    ParamScalar scalar_;
    UniPoly x_, z_;      // zero constant term
    UniPoly delta_, d_;  // c(x) and e(z), constants allowed

    static UniPoly drop_constant(const UniPoly& p) { return p - UniPoly(p.coefficient(0)); }
};

/// The slot operator itself ((1/u)x + const or (1/u)z + const).
FormOperator slot_operator(Slot slot);

/// Evaluate a UniPoly at a slot; the result is scalar + pure x-part (y_minus,
/// y_plus) or scalar + pure z-part (y_one). Ring homomorphism for fixed slot.
FormOperator eval_at_slot(const UniPoly& p, Slot slot);

/// Both normal forms of the push-through identity delta·p(y_one) = p(y_minus)·delta.
/// Throws an internal error when the two forms disagree (algebra bug).
struct PushWitness {
    FormOperator lhs;
    FormOperator rhs;
};
PushWitness push_delta(const UniPoly& p);
/// Same for d·p(y_minus) = p(y_one)·d.
PushWitness push_d(const UniPoly& p);

}  // namespace bgforms
