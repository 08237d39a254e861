// Acceptance gate: every release criterion at full depth, one line each.
#include <cstdio>
#include <iostream>

#include "logcurves/verify.hpp"

int main() {
    using logcurves::CriterionResult;

    auto on_result = [](const CriterionResult& r) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.index << " " << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n" << std::flush;
        std::fprintf(stderr, "  (criterion %d: %.2fs)\n", r.index, r.seconds);
    };

    logcurves::VerifySummary summary = logcurves::run_verification(0, on_result);

    int passed = 0;
    for (const auto& r : summary.results) passed += r.pass ? 1 : 0;
    std::cout << passed << "/" << summary.results.size() << " criteria pass\n";
    return summary.all_pass() ? 0 : 1;
}
