#include <doctest.h>

#include <random>

#include "bgforms/hypergeom.hpp"
#include "bgforms/special.hpp"

using namespace bgforms;

namespace {
const ParamScalar hb = ParamScalar::beta() * ParamScalar(Rational(1, 2));
const ParamScalar lam = ParamScalar::lambda();
}  // namespace

TEST_CASE("terminating series basics") {
    // an upper parameter 0 truncates at the constant term
    HypergeomSpec spec;
    spec.upper = {ParamScalar(0), ParamScalar::beta(), ParamScalar::lambda()};
    spec.lower = {ParamScalar(5), ParamScalar(7)};
    CHECK(pfq_terminating(spec) == ParamScalar(1));

    // Gauss sum instance at m = 3
    HypergeomSpec cv;
    cv.upper = {ParamScalar(-3), ParamScalar::beta()};
    cv.lower = {ParamScalar::lambda()};
    CHECK(pfq_terminating(cv) ==
          pochhammer(lam - ParamScalar::beta(), 3) / pochhammer(lam, 3));

    HypergeomSpec nonterminating;
    nonterminating.upper = {ParamScalar::beta()};
    nonterminating.lower = {ParamScalar::lambda()};
    CHECK_THROWS_AS(pfq_terminating(nonterminating), AlgebraError);

    // lower-parameter pole hit before termination
    HypergeomSpec pole;
    pole.upper = {ParamScalar(-5), ParamScalar::beta()};
    pole.lower = {ParamScalar(-2)};
    CHECK_THROWS_WITH_AS(pfq_terminating(pole), doctest::Contains("hypergeometric pole"),
                         AlgebraError);
}

TEST_CASE("two-term series against a frozen expansion") {
    const UniPoly minus_y{ParamScalar(0), ParamScalar(-1)};
    const UniPoly y_plus_1{ParamScalar(1), ParamScalar(1)};
    const ParamScalar b1 = hb + ParamScalar(2);
    const ParamScalar b2 = lam - hb + ParamScalar(1);
    const UniPoly f =
        pfq_poly({UniPoly(ParamScalar(-1)), minus_y, y_plus_1}, {b1, b2}, ParamScalar(1), 1);
    // the l = 1 term is (-1)(-y)(1+y)/(b1 b2), so the sum is 1 + y(y+1)/(b1 b2);
    // cross-checked against s-[1](y(y+1)) = y(y+1) + (beta/2+2)(lambda-beta/2+1)
    const UniPoly expected =
        UniPoly(1) + (b1 * b2).inverse() * UniPoly{ParamScalar(0), ParamScalar(1), ParamScalar(1)};
    CHECK(f == expected);
    const UniPoly sminus1 = build_s(SumFamily::s_minus, 1)
                                .compose(UniPoly{ParamScalar(0), ParamScalar(1), ParamScalar(1)});
    CHECK(b1 * b2 * f == sminus1);
}

TEST_CASE("parameter permutation symmetry") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> v(2, 9);
    for (int i = 0; i < 20; ++i) {
        const ParamScalar a1(-3), a2 = ParamScalar::beta() + ParamScalar(v(rng)),
                          a3 = ParamScalar::lambda();
        const ParamScalar b1(v(rng)), b2 = ParamScalar::lambda() + ParamScalar(v(rng));
        HypergeomSpec s1{{a1, a2, a3}, {b1, b2}, ParamScalar(1), std::nullopt};
        HypergeomSpec s2{{a3, a1, a2}, {b2, b1}, ParamScalar(1), std::nullopt};
        CHECK(pfq_terminating(s1) == pfq_terminating(s2));
    }
}

TEST_CASE("contiguity of the Gauss sum telescopes with pochhammer") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> num(1, 30);
    for (int m = 0; m <= 6; ++m) {
        const ParamScalar alpha(Rational(num(rng), 7));
        const ParamScalar gamma(Rational(num(rng) + 40, 3));  // nonsingular throughout
        HypergeomSpec fm{{ParamScalar(-m), alpha}, {gamma}, ParamScalar(1), std::nullopt};
        HypergeomSpec fm1{{ParamScalar(-(m + 1)), alpha}, {gamma}, ParamScalar(1), std::nullopt};
        const ParamScalar lhs = pfq_terminating(fm1) * pochhammer(gamma, m + 1);
        const ParamScalar rhs =
            pfq_terminating(fm) * pochhammer(gamma, m) * (gamma - alpha + ParamScalar(m));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dual Hahn polynomials") {
    const ParamScalar a = hb + ParamScalar(1);
    const ParamScalar b = ParamScalar(-1) - hb;
    const ParamScalar N = hb - lam;
    CHECK(dual_hahn(0, a, b, N) == UniPoly(1));
    // m = 1: 1 - w / ((a+1)(N-1))
    const UniPoly dh1 = dual_hahn(1, a, b, N);
    const UniPoly expected{ParamScalar(1),
                           -((a + ParamScalar(1)) * (N - ParamScalar(1))).inverse()};
    CHECK(dh1 == expected);
    for (unsigned m = 0; m <= 5; ++m)
        CHECK(dual_hahn(m, a, b, N).degree() == static_cast<int>(m));

    CHECK_THROWS_AS(dual_hahn(3, ParamScalar(1), ParamScalar(1), ParamScalar(3), true),
                    AlgebraError);
    CHECK_NOTHROW(dual_hahn(2, ParamScalar(1), ParamScalar(1), ParamScalar(3), true));
}

TEST_CASE("dual Hahn agrees with the raw series on the quadratic lattice") {
    // independent numeric oracle: evaluate at integer lattice points
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> v(1, 6);
    for (int trial = 0; trial < 10; ++trial) {
        const ParamScalar a(Rational(v(rng), 3));
        const ParamScalar b(Rational(v(rng), 2));
        const ParamScalar N(20 + v(rng));
        const unsigned m = static_cast<unsigned>(v(rng));
        const UniPoly p = dual_hahn(m, a, b, N);
        for (long n = 0; n <= 4; ++n) {
            const ParamScalar w = ParamScalar(n) * (ParamScalar(n) + a + b + ParamScalar(1));
            HypergeomSpec direct;
            direct.upper = {ParamScalar(-static_cast<long>(m)), ParamScalar(-n),
                            ParamScalar(n) + a + b + ParamScalar(1)};
            direct.lower = {a + ParamScalar(1), ParamScalar(1) - N};
            CHECK(p.eval(w) == pfq_terminating(direct));
        }
    }
}

TEST_CASE("resonant spectral parameter turns the lattice size into a positive integer") {
    for (long N = 1; N <= 5; ++N) {
        const ParamScalar third = hb - lam;  // the dual Hahn N-parameter of the s-families
        CHECK(third.substituted(Var::lambda, hb - ParamScalar(N)) == ParamScalar(N));
    }
}

TEST_CASE("verification suites pass") {
    CHECK(verify_pochhammer_product(8).all_passed());
    CHECK(verify_s_hahn_representation(6).all_passed());
    CHECK(verify_s1_hypergeometric(6).all_passed());
    CHECK(verify_pochhammer_sums(8).all_passed());
}

TEST_CASE("negative controls are caught") {
    CHECK_FALSE(verify_pochhammer_product(2, true).all_passed());
    CHECK_FALSE(verify_s_hahn_representation(2, true).all_passed());
    CHECK_FALSE(verify_s1_hypergeometric(2, true).all_passed());
    CHECK_FALSE(verify_pochhammer_sums(2, true).all_passed());
}
