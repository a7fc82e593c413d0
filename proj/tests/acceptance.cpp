// Acceptance gate: one line per criterion, exit code = number of failures.
// Every check is an exact identity; the stated wall-clock budgets are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bgforms/branson_gover.hpp"
#include "bgforms/bvp.hpp"
#include "bgforms/hypergeom.hpp"
#include "bgforms/special.hpp"
#include "bgforms/suites.hpp"

using namespace bgforms;

namespace {

struct Criterion {
    std::string label;
    double budget_seconds;
    std::function<Report()> run;
};

int failed_checks(const Report& r) { return r.failures(); }

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"1 polynomial recurrences exact to m = 12", 30.0, [] {
                            Report r = verify_sminus_recurrence(12);
                            r.append(verify_splus_recurrence(12));
                            r.append(verify_r1_recurrence(12));
                            r.append(verify_r_relation(12));
                            return r;
                        }});

    criteria.push_back({"2 four-term decomposition of s1 exact for 2 <= m <= 12", 30.0,
                        [] { return verify_s1_decomposition(12); }});

    criteria.push_back({"3 hypergeometric layer exact to m = 10", 60.0, [] {
                            Report r = verify_pochhammer_sums(10);
                            r.append(verify_pochhammer_product(10));
                            r.append(verify_s_hahn_representation(10));
                            r.append(verify_s1_hypergeometric(10));
                            return r;
                        }});

    criteria.push_back({"4 operator algebra soundness (500 triples, 20 reps x 10 points)", 60.0,
                        [] { return verify_operator_soundness(20, 8, 42, 500, 10); }});

    criteria.push_back({"5 flat closed forms: recurrence to j = 8 and u -> 0 match", 30.0, [] {
                            Report r = verify_flat_recurrence(8);
                            r.append(verify_flat_einstein_consistency(8));
                            return r;
                        }});

    criteria.push_back({"6 curved expansion: low-order displays and closed forms to m = 6", 120.0,
                        [] {
                            Report r = verify_einstein_displays();
                            r.append(verify_solution_theorem(6));
                            return r;
                        }});

    criteria.push_back({"7 order-2N operators: recurrence, factorizations, critical case", 120.0,
                        [] {
                            Report r = verify_bg_recurrence(6);
                            r.append(verify_bg_factorization(6));
                            r.append(verify_bg_exceptional(6));
                            r.append(verify_critical({2, 4, 6, 8}));
                            return r;
                        }});

    criteria.push_back({"8 residue link: simple pole, proportionality for N <= 4", 60.0,
                        [] { return verify_residue_link(4); }});

    criteria.push_back({"9 negative controls: every suite catches its mutation", 120.0, [] {
                            SuiteSelector sel;
                            return run_negative_controls(sel);
                        }});

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Report report;
        std::string error;
        try {
            report = criterion.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = seconds < criterion.budget_seconds;
        const bool ok = error.empty() && report.all_passed() && in_budget;
        if (!ok) ++failures;
        std::printf("%s criterion %s (%.1f s, %zu checks)\n", ok ? "PASS" : "FAIL",
                    criterion.label.c_str(), seconds, report.checks.size());
        if (!error.empty()) std::printf("      error: %s\n", error.c_str());
        if (error.empty() && !report.all_passed()) {
            for (const auto& c : report.checks)
                if (!c.passed)
                    std::printf("      failed: %s [%s]\n", c.name.c_str(), c.detail.c_str());
        }
        if (error.empty() && report.all_passed() && !in_budget)
            std::printf("      over budget: %.1f s >= %.1f s\n", seconds,
                        criterion.budget_seconds);
        std::fflush(stdout);
    }
    std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
