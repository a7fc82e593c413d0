#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bgforms {

/// Outcome of a single verified identity. `statement` holds the identity in
/// compact ASCII so reports are self-documenting.
struct CheckResult {
    std::string name;
    std::string statement;
    bool passed = false;
    double millis = 0.0;
    std::string detail;  // failure diagnostics; empty on pass
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += c.passed ? 0 : 1;
        return n;
    }
    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

/// A deferred check; fn returns pass/fail and may set a failure detail.
struct NamedCheck {
    std::string name;
    std::string statement;
    std::function<bool(std::string& detail)> fn;
};

/// Runs the checks (in parallel across worker threads, capped by the
/// BGFORMS_THREADS environment variable) and assembles results in input order.
/// Exceptions thrown by a check are recorded as failures.
Report run_suite(const std::string& suite, std::vector<NamedCheck> checks, bool parallel = true);

/// Thread cap used by run_suite: BGFORMS_THREADS when set (min 1), otherwise
/// hardware concurrency.
unsigned worker_thread_cap();

}  // namespace bgforms
