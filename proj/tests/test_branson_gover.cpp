#include <doctest.h>

#include "bgforms/branson_gover.hpp"
#include "bgforms/special.hpp"

using namespace bgforms;

namespace {
const ParamScalar beta = ParamScalar::beta();
const ParamScalar hb = beta * ParamScalar(Rational(1, 2));
const ParamScalar u = ParamScalar::u();
}  // namespace

TEST_CASE("order-two operator against a frozen expansion") {
    const FormOperator l2 = bg_operator(1, beta);
    const FormOperator expected =
        (hb + ParamScalar(1)) * FormOperator::x() + (hb - ParamScalar(1)) * FormOperator::z() +
        (u * (hb + ParamScalar(1)) * hb * (hb - ParamScalar(1))) * FormOperator::one();
    CHECK(l2 == expected);
    CHECK(l2.is_degree_preserving());
}

TEST_CASE("scalar component and u-degree structure") {
    for (int N = 1; N <= 4; ++N) {
        const FormOperator l = bg_operator(N, beta);
        CHECK(l.u_degree() <= N);
        CHECK(l.scalar() ==
              u.pow(N) * (hb + ParamScalar(N)) * pochhammer(hb - ParamScalar(N), 2 * N));
        // the full x-sector is (beta/2+N) times the evaluated product family
        const FormOperator x_sector = FormOperator::from_x_polynomial(l.x_full());
        const FormOperator expected =
            ((hb + ParamScalar(N)) * u.pow(N)) *
            eval_at_slot(build_r(static_cast<unsigned>(N), ParamScalar(0)), Slot::y_plus);
        CHECK(x_sector == expected);
    }
}

TEST_CASE("normalized variant and its alternative form") {
    CHECK(bg_normalized(1, beta) == hb * bg_operator(1, beta));
    for (int N = 1; N <= 5; ++N) {
        const FormOperator alt =
            u.pow(N) *
            (pochhammer(hb - ParamScalar(N) + ParamScalar(1), 2 * N) *
                 eval_at_slot(build_r(static_cast<unsigned>(N), ParamScalar(0)), Slot::y_plus) +
             pochhammer(hb - ParamScalar(N), 2 * N) *
                 eval_at_slot(build_r1(static_cast<unsigned>(N)), Slot::y_one));
        CHECK(bg_normalized(N, beta) == alt);
    }
    // exceptional locus detection: the normalizer vanishes at beta = 2, N = 2
    CHECK(bg_normalized(2, ParamScalar(2)).is_zero());
    CHECK(pochhammer(ParamScalar(1) - ParamScalar(2) + ParamScalar(1), 3).is_zero());
}

TEST_CASE("exceptional factorizations, frozen cases") {
    // beta = 0, N = 2: 2 (x - z)(x + z - 2u)
    const auto e0 = bg_exceptional(0, 2);
    const FormOperator expected0 =
        ParamScalar(2) * ((FormOperator::x() - FormOperator::z()) *
                          (FormOperator::x() + FormOperator::z() -
                           (ParamScalar(2) * u) * FormOperator::one()));
    CHECK(e0.product == expected0);
    CHECK(e0.product == bg_operator(2, ParamScalar(0)));

    // beta = 2 (l = 1), N = 2: -2 * P~ with an empty tail
    const auto e1 = bg_exceptional(1, 2);
    CHECK(e1.tail.empty());
    CHECK(e1.product == ParamScalar(-2) * e1.fourth_order);
    CHECK(e1.product == bg_operator(2, ParamScalar(2)));

    CHECK(bg_exceptional(1, 3).product == bg_operator(3, ParamScalar(2)));
    CHECK_THROWS_AS(bg_exceptional(3, 3), AlgebraError);
}

TEST_CASE("critical operators at low even beta") {
    // n = 4, p = 1: beta = 2, L = 2x, Q = 2, G = 2 delta
    const CriticalOperators small = critical_operators(4, 1);
    CHECK(small.L == ParamScalar(2) * FormOperator::x());
    CHECK(small.Q == ParamScalar(2) * FormOperator::one());
    CHECK(small.G == ParamScalar(2) * FormOperator::delta());

    // n = 6, p = 1: beta = 4, L = 4 x (x + 2u)
    const CriticalOperators mid = critical_operators(6, 1);
    const FormOperator expected =
        ParamScalar(4) * (FormOperator::x() *
                          (FormOperator::x() + (ParamScalar(2) * u) * FormOperator::one()));
    CHECK(mid.L == expected);

    CHECK_THROWS_AS(critical_operators(5, 1), AlgebraError);   // odd dimension
    CHECK_THROWS_AS(critical_operators(6, 3), AlgebraError);   // beta = 0
    CHECK_THROWS_AS(critical_operators(6, 4), AlgebraError);   // beta < 0
}

TEST_CASE("spec validation") {
    BGSpec bad{2, 7, 12};
    CHECK_THROWS_AS(bad.validate(), AlgebraError);
    BGSpec good{2, 7, 1};
    CHECK_NOTHROW(good.validate());
    CHECK_FALSE(good.exceptional());       // odd n
    BGSpec exc{3, 8, 3};                   // beta = 2, l = 1 < N
    CHECK(exc.exceptional());
    BGSpec generic{1, 8, 1};               // beta = 6, beta/2 = 3 >= N
    CHECK_FALSE(generic.exceptional());
}

TEST_CASE("residue of the order-two solution operator") {
    const ResidueLink link = residue_link(1);
    CHECK(link.simple_pole);
    // derived closed form: 1 / (4 (beta/2 + 1)) = 1 / (2 beta + 4)
    CHECK(link.scalar == (ParamScalar(2) * beta + ParamScalar(4)).inverse());
    CHECK(link.residue_op == link.scalar * link.bg_op);
}

TEST_CASE("residues vanish off the resonance") {
    bool saw = false;
    const FormOperator r = operator_residue(solution_operator(OperatorSign::plus, 2),
                                            hb + ParamScalar(1), saw);
    CHECK_FALSE(saw);
    CHECK(r.is_zero());
}

TEST_CASE("verification suites pass at moderate bounds") {
    CHECK(verify_bg_recurrence(4).all_passed());
    CHECK(verify_bg_factorization(4).all_passed());
    CHECK(verify_bg_exceptional(4).all_passed());
    CHECK(verify_critical({2, 4, 6}).all_passed());
    CHECK(verify_residue_link(2).all_passed());
}

TEST_CASE("negative controls are caught") {
    CHECK_FALSE(verify_bg_recurrence(2, true).all_passed());
    CHECK_FALSE(verify_bg_factorization(2, true).all_passed());
    CHECK_FALSE(verify_bg_exceptional(2, true).all_passed());
    CHECK_FALSE(verify_critical({4}, true).all_passed());
    CHECK_FALSE(verify_residue_link(1, true).all_passed());
}
