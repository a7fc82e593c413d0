#include "bgforms/report.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace bgforms {

unsigned worker_thread_cap() {
    if (const char* env = std::getenv("BGFORMS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

Report run_suite(const std::string& suite, std::vector<NamedCheck> checks, bool parallel) {
    Report report;
    report.suite = suite;
    report.checks.resize(checks.size());

    auto run_one = [&](std::size_t i) {
        CheckResult& r = report.checks[i];
        r.name = checks[i].name;
        r.statement = checks[i].statement;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            std::string detail;
            r.passed = checks[i].fn(detail);
            r.detail = r.passed ? std::string() : detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    };

    const unsigned cap = worker_thread_cap();
    if (!parallel || cap <= 1 || checks.size() <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) run_one(i);
        return report;
    }

    std::atomic<std::size_t> next{0};
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(cap, checks.size()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= report.checks.size()) return;
                run_one(i);
            }
        });
    }
    for (auto& t : pool) t.join();
    return report;
}

}  // namespace bgforms
