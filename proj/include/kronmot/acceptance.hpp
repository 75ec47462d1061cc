#pragma once

#include <functional>
#include <string>
#include <vector>

namespace kronmot {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, or a short summary on success
    double seconds = 0;
    double limit_seconds = 0;
};

/// Runs the full acceptance suite in order. The last entry is the overall
/// runtime check. on_result, when set, is called as each criterion finishes.
std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS [3] identity suite (1.2s, limit 300s): ..." style line.
std::string format_result(const CriterionResult& r);

} // namespace kronmot
