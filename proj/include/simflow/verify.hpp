#pragma once

#include <functional>
#include <string>
#include <vector>

#include "simflow/bigint.hpp"
#include "simflow/options.hpp"

namespace simflow {

/// Phi(5) of the Petersen graph as computed by kernel enumeration; frozen as
/// a regression value.
inline const BigInt kPetersenFlows5{240};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    /// One line of evidence, or the first failure.
    std::string detail;
    double seconds = 0;
};

using CriterionCallback = std::function<void(const CriterionResult&)>;

/// Runs the ten acceptance criteria in order; `on_result` sees each result as
/// soon as it is known. A criterion that throws is recorded as a failure.
std::vector<CriterionResult> run_acceptance_suite(const ComputeOptions& options = {},
                                                  const CriterionCallback& on_result = {});

/// Individual criteria, 1-based, for targeted runs.
CriterionResult run_criterion(int id, const ComputeOptions& options = {});
inline constexpr int kCriterionCount = 10;

} // namespace simflow
