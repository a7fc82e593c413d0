#include <doctest.h>

#include "bgforms/identity.hpp"
#include "bgforms/special.hpp"

using namespace bgforms;

namespace {
const ParamScalar hb = ParamScalar::beta() * ParamScalar(Rational(1, 2));
const ParamScalar lam = ParamScalar::lambda();
const ParamScalar pivot = hb * (hb + ParamScalar(1));
}  // namespace

TEST_CASE("product family basics") {
    CHECK(build_r(0, ParamScalar::beta()) == UniPoly(1));
    CHECK(build_r(1, ParamScalar(0)) == UniPoly::y());
    // eval at the pivot collapses to a Pochhammer stretch
    for (int m = 0; m <= 8; ++m) {
        CHECK(build_r(static_cast<unsigned>(m), ParamScalar(0)).eval(pivot) ==
              pochhammer(hb - ParamScalar(m) + ParamScalar(1), 2 * m));
    }
}

TEST_CASE("companion family basics") {
    CHECK(build_r1(0).is_zero());
    CHECK(build_r1(1) == UniPoly{-pivot, ParamScalar(1)});
    for (int m = 0; m <= 8; ++m) CHECK(build_r1(static_cast<unsigned>(m)).eval(pivot).is_zero());
}

TEST_CASE("sum family conventions and frozen low-index values") {
    CHECK(build_s(SumFamily::s_minus, 0) == UniPoly(1));
    CHECK(build_s(SumFamily::s_plus, 0) == UniPoly(1));
    CHECK(build_s(SumFamily::s_one, 0).is_zero());
    // s+[1] = (beta/2 - lambda - 1)(-beta/2) + y
    const UniPoly expected{(hb - lam - ParamScalar(1)) * (-hb), ParamScalar(1)};
    CHECK(build_s(SumFamily::s_plus, 1) == expected);
}

TEST_CASE("family degrees") {
    for (int m = 0; m <= 8; ++m) {
        CHECK(build_r(static_cast<unsigned>(m), ParamScalar(0)).degree() == m);
        if (m >= 1) CHECK(build_r1(static_cast<unsigned>(m)).degree() == m);
        CHECK(build_s(SumFamily::s_minus, static_cast<unsigned>(m)).degree() == m);
        CHECK(build_s(SumFamily::s_plus, static_cast<unsigned>(m)).degree() == m);
        if (m >= 1) CHECK(build_s(SumFamily::s_one, static_cast<unsigned>(m)).degree() == m);
    }
}

TEST_CASE("relation between the product and companion families, dual route") {
    // single instance checked through both equality routes
    const int m = 3;
    const UniPoly lhs = build_r(m, ParamScalar(0));
    const UniPoly rhs =
        build_r1(m) + UniPoly(pochhammer(hb - ParamScalar(m) + ParamScalar(1), 2 * m));
    DegreeBounds bounds;
    bounds.y = 3;
    bounds.beta = 6;
    bounds.lambda = 0;
    bounds.u = 0;
    CHECK(identity_check(lhs, rhs, bounds, EqualityRoute::canonical));
    CHECK(identity_check(lhs, rhs, bounds, EqualityRoute::sampling));
}

TEST_CASE("s1 vanishes at the pivot and matches the decomposition there") {
    for (int m = 2; m <= 8; ++m) {
        CHECK(build_s(SumFamily::s_one, static_cast<unsigned>(m)).eval(pivot).is_zero());
        const ParamScalar combo =
            (lam - ParamScalar::beta() + ParamScalar(2 * m)) *
                build_s(SumFamily::s_minus, static_cast<unsigned>(m)).eval(pivot) -
            ParamScalar(2 * m) * (lam + ParamScalar(2 * m)) * (lam - hb + ParamScalar(m)) *
                build_s(SumFamily::s_minus, static_cast<unsigned>(m - 1)).eval(pivot) +
            ParamScalar(static_cast<long>(m) * (m - 1)) *
                (lam + ParamScalar::beta() + ParamScalar(2 * m)) *
                pochhammer(lam - hb + ParamScalar(m - 1), 2) *
                build_s(SumFamily::s_minus, static_cast<unsigned>(m - 2)).eval(pivot) -
            pochhammer(lam, m) * (lam - ParamScalar::beta()) * pochhammer(hb, m);
        CHECK(combo.is_zero());
    }
}

TEST_CASE("recurrence verifications pass") {
    CHECK(verify_sminus_recurrence(8).all_passed());
    CHECK(verify_splus_recurrence(8).all_passed());
    CHECK(verify_r_relation(8).all_passed());
    CHECK(verify_r1_recurrence(8).all_passed());
    CHECK(verify_s1_decomposition(8).all_passed());
}

TEST_CASE("negative controls are caught") {
    const Report sminus = verify_sminus_recurrence(3, true);
    CHECK_FALSE(sminus.all_passed());
    CHECK_FALSE(sminus.checks.front().passed);  // fails at m = 1 already
    CHECK_FALSE(verify_splus_recurrence(3, true).all_passed());
    CHECK_FALSE(verify_r1_recurrence(3, true).all_passed());
    CHECK_FALSE(verify_s1_decomposition(3, true).all_passed());
}
