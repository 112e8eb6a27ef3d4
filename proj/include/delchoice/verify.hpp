#pragma once

#include <functional>
#include <string>
#include <vector>

// The acceptance suite: thirteen end-to-end checks tying the implemented
// mechanisms to their regret/rate/incentive guarantees at desk scale. The
// fast suite shrinks horizons and seed counts but keeps every check's shape.
namespace delchoice::verify {

enum class Suite { Fast, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // measured vs required, human-readable
    double seconds = 0.0;
};

Suite suite_from_name(const std::string& name);  // "fast" | "full"

// Runs all criteria in order; on_result (if set) is called after each one.
std::vector<CriterionResult> run_acceptance(
    Suite suite, const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace delchoice::verify
