#include <doctest.h>

#include <random>

#include "bgforms/matrix_oracle.hpp"
#include "bgforms/special.hpp"

using namespace bgforms;

namespace {
const ParamScalar hb = ParamScalar::beta() * ParamScalar(Rational(1, 2));
const ParamScalar lam = ParamScalar::lambda();
}  // namespace

TEST_CASE("addition and normal-form collapses") {
    const FormOperator a = FormOperator::x() + ParamScalar(3) * FormOperator::delta();
    CHECK(a + FormOperator::zero() == a);
    CHECK((FormOperator::delta() + (-FormOperator::delta())).is_zero());

    const FormOperator xz = FormOperator::x() + FormOperator::z();
    CHECK(xz.x_part() == UniPoly::y());
    CHECK(xz.z_part() == UniPoly::y());

    CHECK((FormOperator::x() * FormOperator::z()).is_zero());
    CHECK((FormOperator::z() * FormOperator::x()).is_zero());
    CHECK(FormOperator::delta() * FormOperator::z().pow(2) ==
          FormOperator::delta_times(UniPoly::monomial(2, ParamScalar(1))));
    CHECK(FormOperator::d() * FormOperator::x().pow(3) ==
          FormOperator::d_times(UniPoly::monomial(3, ParamScalar(1))));
    // delta z^3 and x^3 delta are the same element
    CHECK(FormOperator::delta() * FormOperator::z().pow(3) ==
          FormOperator::x().pow(3) * FormOperator::delta());
    CHECK((FormOperator::delta() * FormOperator::x()).is_zero());
    CHECK((FormOperator::d() * FormOperator::z()).is_zero());
    CHECK((FormOperator::x() * FormOperator::d()).is_zero());
    CHECK(FormOperator::x() * FormOperator::delta() ==
          FormOperator::delta_times(UniPoly::monomial(1, ParamScalar(1))));
}

TEST_CASE("z annihilates all but the constant of x-polynomials") {
    // z s+[k](y+) = (lambda)_k (beta/2)_k z
    for (int k = 0; k <= 4; ++k) {
        const FormOperator sk = eval_at_slot(build_s(SumFamily::s_plus, static_cast<unsigned>(k)),
                                             Slot::y_plus);
        const FormOperator lhs = FormOperator::z() * sk;
        const FormOperator rhs = (pochhammer(lam, k) * pochhammer(hb, k)) * FormOperator::z();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("slot evaluation") {
    CHECK(eval_at_slot(UniPoly(1), Slot::y_minus) == FormOperator::one());
    const FormOperator y1 = eval_at_slot(UniPoly::y(), Slot::y_one);
    CHECK(y1 == slot_operator(Slot::y_one));
    CHECK(y1.scalar() == hb * (hb + ParamScalar(1)));
    CHECK(y1.z_part() == UniPoly::monomial(1, ParamScalar::u().inverse()));
    CHECK(y1.x_part().is_zero());

    // s1 at the z-slot is a pure z-part
    for (int m = 1; m <= 5; ++m) {
        const FormOperator s1 =
            eval_at_slot(build_s(SumFamily::s_one, static_cast<unsigned>(m)), Slot::y_one);
        CHECK(s1.scalar().is_zero());
        CHECK(s1.x_part().is_zero());
        CHECK(s1.delta_part().is_zero());
        CHECK(s1.d_part().is_zero());
        CHECK_FALSE(s1.z_part().is_zero());
    }
}

TEST_CASE("slot evaluation is a ring homomorphism") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> c(-5, 5);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int i = 0; i < 30; ++i) {
        UniPoly p, q;
        for (int k = 0; k <= deg(rng); ++k)
            p += UniPoly::monomial(static_cast<std::size_t>(k), ParamScalar(c(rng)));
        for (int k = 0; k <= deg(rng); ++k)
            q += UniPoly::monomial(static_cast<std::size_t>(k), ParamScalar(c(rng)));
        for (const Slot slot : {Slot::y_minus, Slot::y_plus, Slot::y_one}) {
            CHECK(eval_at_slot(p * q, slot) == eval_at_slot(p, slot) * eval_at_slot(q, slot));
            CHECK(eval_at_slot(p + q, slot) == eval_at_slot(p, slot) + eval_at_slot(q, slot));
        }
    }
}

TEST_CASE("push-through witnesses") {
    CHECK_NOTHROW(push_delta(UniPoly::y()));
    CHECK_NOTHROW(push_delta(build_s(SumFamily::s_one, 3)));
    CHECK_NOTHROW(push_d(build_s(SumFamily::s_minus, 5)));
    const PushWitness w = push_delta(UniPoly::y());
    CHECK(w.lhs == w.rhs);
    // d s-[k](y-) delta = d delta s-[k](y1)
    for (int k = 1; k <= 4; ++k) {
        const FormOperator lhs =
            FormOperator::d() *
            eval_at_slot(build_s(SumFamily::s_minus, static_cast<unsigned>(k)), Slot::y_minus) *
            FormOperator::delta();
        const FormOperator rhs =
            FormOperator::z() *
            eval_at_slot(build_s(SumFamily::s_minus, static_cast<unsigned>(k)), Slot::y_one);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        const FormOperator a = random_form_operator(rng, 4);
        const FormOperator b = random_form_operator(rng, 4);
        const FormOperator c = random_form_operator(rng, 4);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("grading is multiplicative") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 20; ++i) {
        const FormOperator any = random_form_operator(rng, 4);
        const FormOperator dpart = FormOperator::d_times(any.d_part());
        const FormOperator deltapart = FormOperator::delta_times(any.delta_part());
        CHECK((dpart * dpart).is_zero());
        CHECK((deltapart * deltapart).is_zero());
        // delta-part lowers, d-part raises: their mixed products land in x/z sectors
        const FormOperator mixed = deltapart * dpart;
        CHECK(mixed.delta_part().is_zero());
        CHECK(mixed.d_part().is_zero());
        CHECK(mixed.scalar().is_zero());
    }
}
