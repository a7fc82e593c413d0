#include <doctest.h>

#include <random>

#include "bgforms/branson_gover.hpp"
#include "bgforms/matrix_oracle.hpp"
#include "bgforms/textio.hpp"

using namespace bgforms;

namespace {

ParamScalar random_param(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-9, 9);
    std::uniform_int_distribution<int> e(0, 3);
    MultiPoly num, den;
    for (int t = 0; t < 3; ++t) {
        Monomial m;
        m.e = {static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)),
               static_cast<std::uint32_t>(e(rng))};
        num += MultiPoly::term(m, Rational(c(rng), 1 + std::abs(c(rng))));
        Monomial md;
        md.e = {static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)), 0};
        den += MultiPoly::term(md, Rational(c(rng)));
    }
    if (den.is_zero()) den = MultiPoly(1);
    if (num.is_zero()) num = MultiPoly(3);
    return ParamScalar(num, den);
}

}  // namespace

TEST_CASE("canonical strings parse back bit-exactly") {
    const ParamScalar sample =
        (ParamScalar::beta() * ParamScalar::beta() - ParamScalar(4)) /
        (ParamScalar(2) * ParamScalar::lambda());
    CHECK(sample.str() == "(beta^2-4)/(2*lambda)");
    CHECK(param_from_string(sample.str()) == sample);
    CHECK(param_from_string(sample.str()).str() == sample.str());

    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
        const ParamScalar p = random_param(rng);
        const std::string s = p.str();
        const ParamScalar q = param_from_string(s);
        CHECK(q == p);
        CHECK(q.str() == s);
    }
}

TEST_CASE("parser handles general expressions") {
    CHECK(param_from_string("beta/2*(beta/2+1)") ==
          ParamScalar::beta() * ParamScalar(Rational(1, 2)) *
              (ParamScalar::beta() * ParamScalar(Rational(1, 2)) + ParamScalar(1)));
    CHECK(param_from_string("-lambda^3") == -(ParamScalar::lambda().pow(3)));
    CHECK(param_from_string(" ( u + 1 ) ^ 2 ") == (ParamScalar::u() + ParamScalar(1)).pow(2));
    CHECK_THROWS_AS(param_from_string("beta +"), AlgebraError);
    CHECK_THROWS_AS(param_from_string("gamma"), AlgebraError);
}

TEST_CASE("operator JSON round-trips bit-exactly") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 25; ++i) {
        const FormOperator op = random_form_operator(rng, 4);
        const nlohmann::json j = form_to_json(op);
        const FormOperator back = form_from_json(j);
        CHECK(back == op);
        CHECK(form_to_json(back).dump() == j.dump());
    }
    // solution operators carry nontrivial denominators
    const FormOperator t2 = solution_operator(OperatorSign::plus, 2);
    CHECK(form_from_json(form_to_json(t2)) == t2);
}

TEST_CASE("text and latex renderings") {
    const FormOperator t1 = solution_operator(OperatorSign::minus, 1);
    const std::string text = form_to_text(t1);
    CHECK(text.find("delta") != std::string::npos);
    CHECK(text.find("beta-lambda") != std::string::npos);  // canonical monic-denominator spelling

    const std::string latex = latex_document(form_to_latex(bg_operator(1, ParamScalar::beta())));
    CHECK(latex.find("\\documentclass") != std::string::npos);
    CHECK(latex.find("\\delta^h \\mathrm{d}") != std::string::npos);
    CHECK(latex.find("\\begin{align*}") != std::string::npos);

    CHECK(form_to_text(FormOperator::zero()) == "0");
}

TEST_CASE("report serialization is deterministic") {
    Report r;
    r.suite = "demo";
    r.checks.push_back({"a", "x = x", true, 1.25, ""});
    r.checks.push_back({"b", "y = y", false, 2.5, "mismatch"});
    const auto j1 = report_to_json(r).dump();
    r.checks[0].millis = 99.0;  // timings must not leak into the JSON
    const auto j2 = report_to_json(r).dump();
    CHECK(j1 == j2);
    CHECK(j1.find("millis") == std::string::npos);
}
