#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bornrule/random.hpp"
#include "bornrule/report.hpp"

namespace bornrule {

struct VerifyOptions {
    bool quick = false;  ///< reduced trial counts, same checks and tolerances
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 0;
};

struct CriterionResult {
    std::string id;
    std::string name;
    double measured = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool supplementary = false;  ///< reported, but not part of the exit status
    std::string detail;
    double seconds = 0.0;  ///< wall time; never written to the result table
};

/// Runs every acceptance check in order.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

/// True iff every non-supplementary criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

/// Deterministic table of the results (no timing columns).
Table acceptance_table(const std::vector<CriterionResult>& results, const VerifyOptions& options);

}  // namespace bornrule
