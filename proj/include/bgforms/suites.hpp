#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgforms/report.hpp"

namespace bgforms {

/// CLI-facing suite selection; bounds default to the documented values.
struct SuiteSelector {
    std::string suite = "all";
    int m_max = 8;
    int n_max = 6;
    int trials = 20;
    int dimension = 8;
    std::uint64_t seed = 42;
};

const std::vector<std::string>& suite_names();
bool is_valid_suite(const std::string& name);

/// Runs one suite (or all); throws an invalid-argument error for unknown names.
Report run_verification_suite(const SuiteSelector& selector);

/// Injects each suite's designated mutation and reports, per suite, whether the
/// mutated run failed as it must (one check per suite; pass means the checker
/// caught the mutation).
Report run_negative_controls(const SuiteSelector& selector);

/// Operator-algebra soundness: associativity on random triples, oracle
/// representation/homomorphism trials, push-through witnesses and grading
/// products.
Report verify_operator_soundness(int trials, int dimension, std::uint64_t seed,
                                 int associativity_triples = 500, int parameter_points = 10);

}  // namespace bgforms
