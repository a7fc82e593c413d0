#include <doctest.h>

#include <random>

#include "bgforms/identity.hpp"
#include "bgforms/param.hpp"

using namespace bgforms;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    return Rational(num(rng), den(rng));
}

MultiPoly random_multipoly(std::mt19937_64& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> e(0, max_deg);
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        m.e = {static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
               static_cast<std::uint32_t>(e(rng))};
        p += MultiPoly::term(m, random_rational(rng));
    }
    return p;
}

ParamScalar random_param(std::mt19937_64& rng) {
    MultiPoly den = random_multipoly(rng, 1, 2);
    if (den.is_zero()) den = MultiPoly(1);
    return ParamScalar(random_multipoly(rng, 2, 3), den);
}

}  // namespace

TEST_CASE("rational normalization") {
    CHECK(rational_normalize(2, 4) == Rational(1, 2));
    CHECK(rational_normalize(3, -6) == Rational(-1, 2));
    CHECK(rational_normalize(0, 7) == Rational(0));
    CHECK(rational_normalize(0, 7).denominator() == Integer(1));
    CHECK_THROWS_WITH_AS(rational_normalize(1, 0), doctest::Contains("division by zero"),
                         AlgebraError);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("multipoly gcd and division") {
    const MultiPoly beta = MultiPoly::variable(Var::beta);
    const MultiPoly lambda = MultiPoly::variable(Var::lambda);
    const MultiPoly diff = beta - lambda;
    const MultiPoly sum = beta + lambda;
    CHECK(MultiPoly::gcd(diff * sum, diff) == diff);
    CHECK(*MultiPoly::divide_exact(diff * sum, diff) == sum);
    CHECK(!MultiPoly::divide_exact(sum, diff).has_value());
    CHECK(MultiPoly::gcd(sum, diff).is_one());

    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        const MultiPoly a = random_multipoly(rng, 2, 3);
        const MultiPoly b = random_multipoly(rng, 2, 3);
        const MultiPoly g = random_multipoly(rng, 1, 2);
        if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
        const MultiPoly gg = MultiPoly::gcd(a * g, b * g);
        // the common factor divides the gcd, and the gcd divides both products
        CHECK(MultiPoly::divide_exact(gg, g.primitive_parts().second).has_value());
        CHECK(MultiPoly::divide_exact(a * g, gg).has_value());
        CHECK(MultiPoly::divide_exact(b * g, gg).has_value());
    }
}

TEST_CASE("param scalar canonicalization") {
    const ParamScalar beta = ParamScalar::beta();
    const ParamScalar lambda = ParamScalar::lambda();
    const ParamScalar u = ParamScalar::u();

    CHECK((beta * beta - lambda * lambda) / (beta - lambda) == beta + lambda);
    CHECK((beta - lambda) / (beta - lambda) == ParamScalar(1));
    CHECK(u / (ParamScalar(2) * u) == ParamScalar(Rational(1, 2)));
    CHECK_THROWS_WITH_AS(ParamScalar(MultiPoly(1), MultiPoly()),
                         doctest::Contains("division by zero"), AlgebraError);
    CHECK_THROWS_WITH_AS(ParamScalar(0).inverse(), doctest::Contains("division by zero"),
                         AlgebraError);

    // denominator stays monic under the graded-lex order
    const ParamScalar q = (beta + ParamScalar(1)) / (ParamScalar(3) * lambda + beta);
    CHECK(q.den().leading_coefficient().is_one());
}

TEST_CASE("param scalar field axioms") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        const ParamScalar a = random_param(rng), b = random_param(rng), c = random_param(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == ParamScalar(1));
    }
}

TEST_CASE("pochhammer basics and telescoping") {
    const ParamScalar a = ParamScalar::beta() + ParamScalar(Rational(1, 3));
    CHECK(pochhammer(a, 0) == ParamScalar(1));
    CHECK(pochhammer(ParamScalar(3), 2) == ParamScalar(12));

    const ParamScalar hb = ParamScalar::beta() * ParamScalar(Rational(1, 2));
    for (long m = 1; m <= 4; ++m)
        CHECK(pochhammer(hb + ParamScalar(m) + ParamScalar(1), -1) ==
              (hb + ParamScalar(m)).inverse());
    // telescoping (a)_{m+1} = (a)_m (a+m) across both signs
    for (long m = -6; m <= 6; ++m)
        CHECK(pochhammer(a, m + 1) == pochhammer(a, m) * (a + ParamScalar(m)));
    CHECK(pochhammer(a, -1) * (a - ParamScalar(1)) == ParamScalar(1));
    CHECK_THROWS_WITH_AS(pochhammer(ParamScalar(1), -1), doctest::Contains("pole of Pochhammer"),
                         AlgebraError);
}

TEST_CASE("unipoly evaluation is a ring homomorphism") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        UniPoly p, q;
        std::uniform_int_distribution<int> deg(0, 4);
        const int dp = deg(rng), dq = deg(rng);
        for (int k = 0; k <= dp; ++k)
            p += UniPoly::monomial(static_cast<std::size_t>(k), ParamScalar(random_rational(rng)));
        for (int k = 0; k <= dq; ++k)
            q += UniPoly::monomial(static_cast<std::size_t>(k), ParamScalar(random_rational(rng)));
        const ParamScalar v = ParamScalar(random_rational(rng)) + ParamScalar::beta();
        CHECK((p * q).eval(v) == p.eval(v) * q.eval(v));
        CHECK((p + q).eval(v) == p.eval(v) + q.eval(v));
    }
}

TEST_CASE("identity check routes agree on random pairs") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<int> deg(0, 8);
    std::uniform_int_distribution<int> flip(0, 1);
    int disagreements = 0;
    for (int i = 0; i < 1000; ++i) {
        UniPoly p;
        const int dp = deg(rng);
        for (int k = 0; k <= dp; ++k) {
            ParamScalar c(random_rational(rng));
            if (flip(rng)) c *= ParamScalar::beta();
            if (flip(rng)) c += ParamScalar::lambda();
            p += UniPoly::monomial(static_cast<std::size_t>(k), c);
        }
        UniPoly q = p;
        if (flip(rng)) q += UniPoly::monomial(static_cast<std::size_t>(deg(rng)),
                                              ParamScalar(random_rational(rng)));
        DegreeBounds bounds;
        bounds.y = std::max(p.degree(), q.degree());
        int db = 0, dl = 0;
        for (const auto* poly : {&p, &q})
            for (const auto& c : poly->coefficients()) {
                db = std::max(db, c.num().degree(Var::beta));
                dl = std::max(dl, c.num().degree(Var::lambda));
            }
        bounds.beta = db;
        bounds.lambda = dl;
        bounds.u = 0;
        const bool canonical = identity_check(p, q, bounds, EqualityRoute::canonical);
        const bool sampled = identity_check(p, q, bounds, EqualityRoute::sampling);
        if (canonical != sampled) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("identity check rejects unequal polynomials") {
    const UniPoly y = UniPoly::y();
    DegreeBounds bounds;
    bounds.y = 1;
    CHECK(identity_check(y, y, bounds));
    CHECK_FALSE(identity_check(y, y + UniPoly(1), bounds));
    CHECK_FALSE(identity_check(y, y + UniPoly(1), bounds, EqualityRoute::sampling));
}
