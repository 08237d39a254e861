#pragma once

#include <functional>
#include <string>
#include <vector>

#include "logcurves/util.hpp"

namespace logcurves {

// One acceptance criterion outcome. `seconds` is for human-readable progress
// lines only and is never serialized into result documents.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifySummary {
    std::vector<CriterionResult> results;
    bool all_pass() const {
        if (results.empty()) return false;
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

// Runs every acceptance criterion at full depth. depth > 0 caps the sweep
// sizes for quick smoke runs; the gate runs with depth <= 0. on_result, if
// set, is called after each criterion finishes.
VerifySummary run_verification(int depth = 0,
                               const std::function<void(const CriterionResult&)>& on_result = {});

// Stratum census computed by a route independent of the tree enumerator:
// recursion over the set partition of the marks at the root vertex, counted
// by block-size type with multinomial coefficients.
i64 census_independent(int n, int codim);

} // namespace logcurves
