#include <doctest.h>

#include <random>

#include "bgforms/matrix_oracle.hpp"

using namespace bgforms;

TEST_CASE("random square-zero matrices square to zero and are nonzero") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const RatMatrix m = random_square_zero(8, rng);
        CHECK_FALSE(m.is_zero());
        CHECK((m * m).is_zero());
    }
}

TEST_CASE("left nullspace vectors annihilate the matrix") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> small(-4, 4);
    RatMatrix u(6, 3);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 3; ++j) u.at(i, j) = Rational(small(rng));
    for (const auto& w : u.left_nullspace()) {
        for (std::size_t j = 0; j < 3; ++j) {
            Rational dot(0);
            for (std::size_t i = 0; i < 6; ++i) dot += w[i] * u.at(i, j);
            CHECK(dot.is_zero());
        }
    }
}

TEST_CASE("oracle equates equal normal forms and separates distinct ones") {
    const auto equal = matrix_oracle_check(FormOperator::x() * FormOperator::z(),
                                           FormOperator::zero(), 10, 8, 99);
    CHECK(equal.report.all_passed());
    CHECK(equal.equal_trials == equal.trials);

    const auto pushed =
        matrix_oracle_check(FormOperator::delta() * FormOperator::z().pow(3),
                            FormOperator::delta_times(UniPoly::monomial(3, ParamScalar(1))), 10, 8, 99);
    CHECK(pushed.report.all_passed());
    CHECK(pushed.equal_trials == pushed.trials);

    const auto distinct = matrix_oracle_check(FormOperator::x(), FormOperator::z(), 10, 8, 99);
    CHECK(distinct.report.all_passed());
    CHECK(distinct.equal_trials < distinct.trials);
}

TEST_CASE("representation is an algebra homomorphism") {
    std::mt19937_64 rng(7);
    MatrixRep rep;
    rep.d_mat = random_square_zero(8, rng);
    rep.delta_mat = random_square_zero(8, rng);
    for (int i = 0; i < 10; ++i) {
        const FormOperator a = random_form_operator(rng, 3);
        const FormOperator b = random_form_operator(rng, 3);
        rep.param_point = sample_parameter_point({a, b, a * b}, rng);
        CHECK(representation(a * b, rep) == representation(a, rep) * representation(b, rep));
        CHECK(representation(a + b, rep) == representation(a, rep) + representation(b, rep));
    }
}

TEST_CASE("singular parameter points are detected") {
    // 1/u-bearing operator is singular at u = 0
    const FormOperator op = slot_operator(Slot::y_minus);
    CHECK(parameter_point_singular(op, {Rational(1), Rational(1), Rational(0)}));
    CHECK_FALSE(parameter_point_singular(op, {Rational(1), Rational(1), Rational(2)}));
}
