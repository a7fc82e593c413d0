#include <doctest.h>

#include <random>

#include "bgforms/bvp.hpp"
#include "bgforms/matrix_oracle.hpp"

using namespace bgforms;

namespace {
const ParamScalar beta = ParamScalar::beta();
const ParamScalar lam = ParamScalar::lambda();
}  // namespace

TEST_CASE("recurrence coefficient instances") {
    CHECK(einstein_coefficients(2).a ==
          ParamScalar(-2) * (beta - ParamScalar(2) * lam - ParamScalar(2)));
    CHECK(einstein_coefficients(4).c == ParamScalar(-2) * lam * beta);
    CHECK(einstein_coefficients(2).A == ParamScalar(-2) * (beta - lam));
    // resonance locus: a_{2k} vanishes exactly at lambda = beta/2 - k
    for (long k = 1; k <= 5; ++k) {
        const ParamScalar res = beta * ParamScalar(Rational(1, 2)) - ParamScalar(k);
        CHECK(einstein_coefficients(2 * k).a.substituted(Var::lambda, res).is_zero());
    }
}

TEST_CASE("low-order solved entries") {
    const ExpansionTable table = solve_einstein_recurrence(1);
    CHECK(table.plus(0) == FormOperator::one());
    CHECK(table.minus(0).is_zero());
    CHECK(table.minus(2) == (lam - beta).inverse() * FormOperator::delta());
}

TEST_CASE("solution operator conventions and frozen low-order instances") {
    CHECK(solution_operator(OperatorSign::plus, 0) == FormOperator::one());
    CHECK(solution_operator(OperatorSign::minus, 0).is_zero());
    CHECK(solution_operator(OperatorSign::minus, 1) ==
          (lam - beta).inverse() * FormOperator::delta());
}

TEST_CASE("flat closed forms") {
    CHECK(flat_solution_operator(OperatorSign::minus, 0, 7, 2).is_zero());
    CHECK(flat_solution_operator(OperatorSign::plus, 0, 7, 2) == FormOperator::one());
    // j = 1: delta / (lambda - n + 2p)
    const FormOperator t1 = flat_solution_operator(OperatorSign::minus, 1, 7, 2);
    CHECK(t1 == (lam - ParamScalar(3)).inverse() * FormOperator::delta());
}

TEST_CASE("minus entries carry only a delta component") {
    const ExpansionTable table = solve_einstein_recurrence(4);
    for (int m = 1; m <= 4; ++m) {
        const FormOperator& w = table.minus(2 * m);
        CHECK(w.scalar().is_zero());
        CHECK(w.x_part().is_zero());
        CHECK(w.z_part().is_zero());
        CHECK(w.d_part().is_zero());
        CHECK_FALSE(w.delta_part().is_zero());
    }
}

TEST_CASE("table construction is order independent") {
    const ExpansionTable big = solve_einstein_recurrence(4);
    const ExpansionTable small = solve_einstein_recurrence(2);
    for (int idx = 0; idx <= 4; idx += 2) {
        CHECK(big.plus(idx) == small.plus(idx));
        CHECK(big.minus(idx) == small.minus(idx));
    }
}

TEST_CASE("verification suites pass at moderate bounds") {
    CHECK(verify_flat_recurrence(6).all_passed());
    CHECK(verify_flat_einstein_consistency(4).all_passed());
    CHECK(verify_einstein_displays().all_passed());
    CHECK(verify_solution_theorem(3).all_passed());
}

TEST_CASE("negative controls are caught") {
    CHECK_FALSE(verify_flat_recurrence(2, true).all_passed());
    CHECK_FALSE(verify_flat_einstein_consistency(2, true).all_passed());
    const Report r = verify_solution_theorem(2, true);
    CHECK_FALSE(r.all_passed());
    // the mutated B coefficient first enters the step at order 4
    CHECK(r.checks.front().passed);
}

TEST_CASE("resonant specialization is rejected") {
    const FormOperator t2 = solution_operator(OperatorSign::plus, 2);
    CHECK_THROWS_WITH_AS(
        specialize_operator(t2, Rational(4), Rational(1), Rational(1)),
        doctest::Contains("resonant parameter"), AlgebraError);
    CHECK_NOTHROW(specialize_operator(t2, Rational(4), Rational(17, 3), Rational(1)));
}

TEST_CASE("solved identity survives random matrix specialization") {
    std::mt19937_64 rng(47);
    const int m = 2;
    const ExpansionTable table = solve_einstein_recurrence(m);
    const FormOperator closed_plus = solution_operator(OperatorSign::plus, m);
    const FormOperator closed_minus = solution_operator(OperatorSign::minus, m);
    for (int trial = 0; trial < 50; ++trial) {
        MatrixRep rep;
        rep.d_mat = random_square_zero(6, rng);
        rep.delta_mat = random_square_zero(6, rng);
        rep.param_point =
            sample_parameter_point({table.plus(2 * m), table.minus(2 * m), closed_plus, closed_minus}, rng);
        CHECK(representation(table.plus(2 * m), rep) == representation(closed_plus, rep));
        CHECK(representation(table.minus(2 * m), rep) == representation(closed_minus, rep));
    }
}
