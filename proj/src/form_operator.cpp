#include "bgforms/form_operator.hpp"

#include "bgforms/error.hpp"

namespace bgforms {

FormOperator FormOperator::x(std::size_t power) {
    FormOperator r;
    if (power == 0) return one();
    r.x_ = UniPoly::monomial(power, ParamScalar(1));
    return r;
}

FormOperator FormOperator::z(std::size_t power) {
    FormOperator r;
    if (power == 0) return one();
    r.z_ = UniPoly::monomial(power, ParamScalar(1));
    return r;
}

FormOperator FormOperator::d() {
    FormOperator r;
    r.d_ = UniPoly(1);
    return r;
}

FormOperator FormOperator::delta() {
    FormOperator r;
    r.delta_ = UniPoly(1);
    return r;
}

FormOperator FormOperator::delta_times(const UniPoly& c) {
    FormOperator r;
    r.delta_ = c;
    return r;
}

FormOperator FormOperator::d_times(const UniPoly& e) {
    FormOperator r;
    r.d_ = e;
    return r;
}

FormOperator FormOperator::from_x_polynomial(const UniPoly& full) {
    FormOperator r;
    r.scalar_ = full.coefficient(0);
    r.x_ = drop_constant(full);
    return r;
}

FormOperator FormOperator::from_z_polynomial(const UniPoly& full) {
    FormOperator r;
    r.scalar_ = full.coefficient(0);
    r.z_ = drop_constant(full);
    return r;
}

FormOperator FormOperator::from_parts(const ParamScalar& scalar, const UniPoly& x_part,
                                      const UniPoly& z_part, const UniPoly& delta_part,
                                      const UniPoly& d_part) {
    FormOperator r;
    r.scalar_ = scalar;
    r.x_ = drop_constant(x_part);
    r.z_ = drop_constant(z_part);
    r.delta_ = delta_part;
    r.d_ = d_part;
    return r;
}

FormOperator FormOperator::operator-() const {
    FormOperator r;
    r.scalar_ = -scalar_;
    r.x_ = -x_;
    r.z_ = -z_;
    r.delta_ = -delta_;
    r.d_ = -d_;
    return r;
}

FormOperator operator+(const FormOperator& a, const FormOperator& b) {
    FormOperator r;
    r.scalar_ = a.scalar_ + b.scalar_;
    r.x_ = a.x_ + b.x_;
    r.z_ = a.z_ + b.z_;
    r.delta_ = a.delta_ + b.delta_;
    r.d_ = a.d_ + b.d_;
    return r;
}

FormOperator operator-(const FormOperator& a, const FormOperator& b) { return a + (-b); }

FormOperator operator*(const ParamScalar& s, const FormOperator& a) {
    FormOperator r;
    r.scalar_ = s * a.scalar_;
    r.x_ = s * a.x_;
    r.z_ = s * a.z_;
    r.delta_ = s * a.delta_;
    r.d_ = s * a.d_;
    return r;
}

FormOperator operator*(const FormOperator& a, const FormOperator& b) {
    // With X = scalar + P(x), Z = scalar + Q(z) the product multiplies the two
    // commuting sectors and routes delta/d parts through the push rules; the
    // only cross terms are c1(x)delta * e2(z)d = x*(c1*e2)(x) and
    // e1(z)d * c2(x)delta = z*(e1*c2)(z).
    const UniPoly x1 = a.x_full(), x2 = b.x_full();
    const UniPoly z1 = a.z_full(), z2 = b.z_full();
    FormOperator r;
    r.scalar_ = a.scalar_ * b.scalar_;
    r.x_ = FormOperator::drop_constant(x1 * x2) + (a.delta_ * b.d_).shifted_up(1);
    r.z_ = FormOperator::drop_constant(z1 * z2) + (a.d_ * b.delta_).shifted_up(1);
    r.delta_ = x1 * b.delta_ + a.delta_ * z2;
    r.d_ = z1 * b.d_ + a.d_ * x2;
    return r;
}

FormOperator FormOperator::pow(unsigned e) const {
    FormOperator r = one();
    FormOperator base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

FormOperator FormOperator::substituted(Var v, const ParamScalar& value) const {
    const auto sub = [&](const ParamScalar& s) { return s.substituted(v, value); };
    FormOperator r;
    r.scalar_ = sub(scalar_);
    r.x_ = x_.mapped(sub);
    r.z_ = z_.mapped(sub);
    r.delta_ = delta_.mapped(sub);
    r.d_ = d_.mapped(sub);
    return r;
}

int FormOperator::u_degree() const {
    int deg = -1;
    const auto scan = [&deg](const UniPoly& p) {
        for (const auto& c : p.coefficients())
            deg = std::max(deg, c.num().degree(Var::u));
    };
    deg = std::max(deg, scalar_.num().degree(Var::u));
    scan(x_);
    scan(z_);
    scan(delta_);
    scan(d_);
    return deg;
}

FormOperator slot_operator(Slot slot) {
    const ParamScalar hb = ParamScalar::beta() * ParamScalar(Rational(1, 2));
    const ParamScalar inv_u = ParamScalar::u().inverse();
    const ParamScalar c_plusone = hb * (hb + ParamScalar(1));
    const ParamScalar c_minusone = hb * (hb - ParamScalar(1));
    switch (slot) {
        case Slot::y_minus:
            return FormOperator::from_x_polynomial(UniPoly{c_plusone, inv_u});
        case Slot::y_plus:
            return FormOperator::from_x_polynomial(UniPoly{c_minusone, inv_u});
        case Slot::y_one:
            return FormOperator::from_z_polynomial(UniPoly{c_plusone, inv_u});
    }
    return FormOperator();
}

FormOperator eval_at_slot(const UniPoly& p, Slot slot) {
    const ParamScalar hb = ParamScalar::beta() * ParamScalar(Rational(1, 2));
    const ParamScalar inv_u = ParamScalar::u().inverse();
    const ParamScalar shift =
        slot == Slot::y_plus ? hb * (hb - ParamScalar(1)) : hb * (hb + ParamScalar(1));
    // Each slot is a single commuting element, so this is univariate composition.
    const UniPoly composed = p.compose(UniPoly{shift, inv_u});
    return slot == Slot::y_one ? FormOperator::from_z_polynomial(composed)
                               : FormOperator::from_x_polynomial(composed);
}

PushWitness push_delta(const UniPoly& p) {
    PushWitness w;
    w.lhs = FormOperator::delta() * eval_at_slot(p, Slot::y_one);
    w.rhs = eval_at_slot(p, Slot::y_minus) * FormOperator::delta();
    if (w.lhs != w.rhs)
        throw AlgebraError(AlgebraError::Kind::internal,
                           "push-through failure: delta * p(y1) != p(y-) * delta");
    return w;
}

PushWitness push_d(const UniPoly& p) {
    PushWitness w;
    w.lhs = FormOperator::d() * eval_at_slot(p, Slot::y_minus);
    w.rhs = eval_at_slot(p, Slot::y_one) * FormOperator::d();
    if (w.lhs != w.rhs)
        throw AlgebraError(AlgebraError::Kind::internal,
                           "push-through failure: d * p(y-) != p(y1) * d");
    return w;
}

}  // namespace bgforms
