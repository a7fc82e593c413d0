#include "bgforms/suites.hpp"

#include <random>

#include "bgforms/branson_gover.hpp"
#include "bgforms/bvp.hpp"
#include "bgforms/error.hpp"
#include "bgforms/hypergeom.hpp"
#include "bgforms/matrix_oracle.hpp"
#include "bgforms/special.hpp"

namespace bgforms {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "poly-recurrences", "hahn",           "s1-hypergeom",   "lemma-a1",
        "flat-bvp",         "einstein-bvp",   "bg-recurrence",  "bg-factorization",
        "bg-exceptional",   "critical",       "residue",        "oracle",
        "all"};
    return names;
}

bool is_valid_suite(const std::string& name) {
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

Report verify_operator_soundness(int trials, int dimension, std::uint64_t seed,
                                 int associativity_triples, int parameter_points) {
    std::vector<NamedCheck> checks;

    const int chunks = 10;
    const int per_chunk = std::max(1, associativity_triples / chunks);
    for (int c = 0; c < chunks; ++c) {
        checks.push_back(
            {"associativity-" + std::to_string(c), "(a b) c = a (b c) on random operators",
             [c, per_chunk, seed](std::string& detail) {
                 std::mt19937_64 rng(seed ^ (0xabcdefULL + static_cast<std::uint64_t>(c)));
                 for (int i = 0; i < per_chunk; ++i) {
                     const FormOperator a = random_form_operator(rng, 4);
                     const FormOperator b = random_form_operator(rng, 4);
                     const FormOperator op_c = random_form_operator(rng, 4);
                     if ((a * b) * op_c != a * (b * op_c)) {
                         detail = "associativity violated";
                         return false;
                     }
                 }
                 return true;
             }});
    }

    checks.push_back(
        {"grading-squares", "delta-part squared and d-part squared vanish",
         [seed](std::string& detail) {
             std::mt19937_64 rng(seed ^ 0x5151ULL);
             for (int i = 0; i < 50; ++i) {
                 const FormOperator any = random_form_operator(rng, 4);
                 const FormOperator only_delta =
                     FormOperator::delta_times(any.delta_part());
                 const FormOperator only_d = FormOperator::d_times(any.d_part());
                 if (!(only_delta * only_delta).is_zero() || !(only_d * only_d).is_zero()) {
                     detail = "square-zero grading violated";
                     return false;
                 }
             }
             return true;
         }});

    checks.push_back({"push-through", "delta p(y1) = p(y-) delta and d p(y-) = p(y1) d",
                      [](std::string& detail) {
                          push_delta(UniPoly::y());
                          push_delta(build_s(SumFamily::s_one, 3));
                          push_d(build_s(SumFamily::s_minus, 5));
                          (void)detail;
                          return true;  // push_* throw on mismatch
                      }});

    checks.push_back(
        {"normal-form-collapses", "x z = 0 and delta z^3 = x^3 delta in matrix images",
         [trials, dimension, seed](std::string& detail) {
             const auto both_zero =
                 matrix_oracle_check(FormOperator::x() * FormOperator::z(), FormOperator::zero(),
                                     trials, static_cast<std::size_t>(dimension), seed);
             if (!both_zero.report.all_passed() ||
                 both_zero.equal_trials != both_zero.trials) {
                 detail = "x z did not vanish in some representation";
                 return false;
             }
             const auto pushed = matrix_oracle_check(
                 FormOperator::delta() * FormOperator::z().pow(3),
                 FormOperator::delta_times(UniPoly::monomial(3, ParamScalar(1))), trials,
                 static_cast<std::size_t>(dimension), seed + 1);
             if (!pushed.report.all_passed() || pushed.equal_trials != pushed.trials) {
                 detail = "delta z^3 and x^3 delta disagreed in some representation";
                 return false;
             }
             return true;
         }});

    checks.push_back(
        {"oracle-distinguishes", "x and z differ in at least one random representation",
         [trials, dimension, seed](std::string& detail) {
             const auto out = matrix_oracle_check(FormOperator::x(), FormOperator::z(), trials,
                                                  static_cast<std::size_t>(dimension), seed + 2);
             if (!out.report.all_passed()) {
                 detail = "oracle trial failed";
                 return false;
             }
             if (out.equal_trials == out.trials) {
                 detail = "no representation distinguished x from z";
                 return false;
             }
             return true;
         }});

    for (int t = 0; t < trials; ++t) {
        checks.push_back(
            {"homomorphism-trial-" + std::to_string(t),
             "rep(a b) = rep(a) rep(b) and rep(a + b) = rep(a) + rep(b) at random points",
             [t, dimension, seed, parameter_points](std::string& detail) {
                 std::mt19937_64 rng(seed + 1000 + static_cast<std::uint64_t>(t));
                 MatrixRep rep;
                 rep.d_mat = random_square_zero(static_cast<std::size_t>(dimension), rng);
                 rep.delta_mat = random_square_zero(static_cast<std::size_t>(dimension), rng);
                 const FormOperator a = random_form_operator(rng, 3);
                 const FormOperator b = random_form_operator(rng, 3);
                 const FormOperator ab = a * b;
                 const FormOperator sum = a + b;
                 for (int pt = 0; pt < parameter_points; ++pt) {
                     rep.param_point = sample_parameter_point({a, b, ab}, rng);
                     const RatMatrix ma = representation(a, rep);
                     const RatMatrix mb = representation(b, rep);
                     if (representation(ab, rep) != ma * mb) {
                         detail = "multiplicativity failed";
                         return false;
                     }
                     if (representation(sum, rep) != ma + mb) {
                         detail = "additivity failed";
                         return false;
                     }
                 }
                 return true;
             }});
    }

    return run_suite("operator-soundness", std::move(checks));
}

namespace {

Report run_single(const SuiteSelector& sel, const std::string& name) {
    if (name == "poly-recurrences") {
        Report r = verify_sminus_recurrence(sel.m_max);
        r.suite = "poly-recurrences";
        r.append(verify_splus_recurrence(sel.m_max));
        r.append(verify_r_relation(sel.m_max));
        r.append(verify_r1_recurrence(sel.m_max));
        r.append(verify_s1_decomposition(sel.m_max));
        return r;
    }
    if (name == "hahn") {
        Report r = verify_pochhammer_product(sel.m_max);
        r.suite = "hahn";
        r.append(verify_s_hahn_representation(sel.m_max));
        return r;
    }
    if (name == "s1-hypergeom") return verify_s1_hypergeometric(sel.m_max);
    if (name == "lemma-a1") return verify_pochhammer_sums(sel.m_max);
    if (name == "flat-bvp") {
        Report r = verify_flat_recurrence(sel.m_max);
        r.suite = "flat-bvp";
        r.append(verify_flat_einstein_consistency(sel.m_max));
        return r;
    }
    if (name == "einstein-bvp") {
        Report r = verify_einstein_displays();
        r.suite = "einstein-bvp";
        r.append(verify_solution_theorem(std::min(sel.m_max, 6)));
        return r;
    }
    if (name == "bg-recurrence") return verify_bg_recurrence(sel.n_max);
    if (name == "bg-factorization") return verify_bg_factorization(sel.n_max);
    if (name == "bg-exceptional") return verify_bg_exceptional(sel.n_max);
    if (name == "critical") return verify_critical({2, 4, 6, 8});
    if (name == "residue") return verify_residue_link(std::min(sel.n_max, 4));
    if (name == "oracle")
        return verify_operator_soundness(sel.trials, sel.dimension, sel.seed);
    throw AlgebraError(AlgebraError::Kind::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace

Report run_verification_suite(const SuiteSelector& selector) {
    if (!is_valid_suite(selector.suite))
        throw AlgebraError(AlgebraError::Kind::invalid_argument,
                           "unknown suite '" + selector.suite + "'");
    if (selector.suite != "all") return run_single(selector, selector.suite);
    Report all;
    all.suite = "all";
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        all.append(run_single(selector, name));
    }
    return all;
}

Report run_negative_controls(const SuiteSelector& selector) {
    (void)selector;
    std::vector<NamedCheck> checks;
    const auto expect_failure = [](const char* name, Report (*runner)()) {
        return NamedCheck{std::string("mutation-detected:") + name,
                          "the mutated identity must fail",
                          [runner](std::string& detail) {
                              if (runner().all_passed()) {
                                  detail = "mutation slipped through";
                                  return false;
                              }
                              return true;
                          }};
    };
    checks.push_back(expect_failure("poly-recurrences-sminus",
                                    [] { return verify_sminus_recurrence(2, true); }));
    checks.push_back(expect_failure("poly-recurrences-splus",
                                    [] { return verify_splus_recurrence(2, true); }));
    checks.push_back(expect_failure("poly-recurrences-r1",
                                    [] { return verify_r1_recurrence(2, true); }));
    checks.push_back(expect_failure("poly-recurrences-s1",
                                    [] { return verify_s1_decomposition(2, true); }));
    checks.push_back(expect_failure("hahn-product-sign",
                                    [] { return verify_pochhammer_product(2, true); }));
    checks.push_back(expect_failure("hahn-swapped-lower",
                                    [] { return verify_s_hahn_representation(2, true); }));
    checks.push_back(expect_failure("s1-hypergeom-gamma-shift",
                                    [] { return verify_s1_hypergeometric(2, true); }));
    checks.push_back(expect_failure("lemma-a1-wrong-numerator",
                                    [] { return verify_pochhammer_sums(2, true); }));
    checks.push_back(
        expect_failure("flat-bvp-beta-shift", [] { return verify_flat_recurrence(2, true); }));
    checks.push_back(expect_failure("flat-einstein-beta-mismatch",
                                    [] { return verify_flat_einstein_consistency(2, true); }));
    checks.push_back(expect_failure("einstein-bvp-mutated-B",
                                    [] { return verify_solution_theorem(2, true); }));
    checks.push_back(expect_failure("bg-recurrence-swapped-xz",
                                    [] { return verify_bg_recurrence(2, true); }));
    checks.push_back(expect_failure("bg-factorization-mutated-factor",
                                    [] { return verify_bg_factorization(2, true); }));
    checks.push_back(expect_failure("bg-exceptional-sign",
                                    [] { return verify_bg_exceptional(2, true); }));
    checks.push_back(
        expect_failure("critical-wrong-side", [] { return verify_critical({4}, true); }));
    checks.push_back(
        expect_failure("residue-mutated-target", [] { return verify_residue_link(1, true); }));
    checks.push_back({"mutation-detected:oracle",
                      "the oracle distinguishes x from z",
                      [](std::string& detail) {
                          const auto out =
                              matrix_oracle_check(FormOperator::x(), FormOperator::z(), 8, 6, 7);
                          if (out.equal_trials == out.trials) {
                              detail = "oracle failed to distinguish distinct normal forms";
                              return false;
                          }
                          return true;
                      }});
    return run_suite("negative-controls", std::move(checks));
}

}  // namespace bgforms
