/**
 * @file acceptance_suite.hpp
 * @brief The desk-scale acceptance suite: one criterion per entry, each an
 *        exact (or fixed-tolerance numeric) check with a pinned time budget.
 *        Shared between the standalone acceptance runner and the CLI's
 *        `verify all --level desk`.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qt::accept {

struct CriterionResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail;  // failure description; empty on pass
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_pass = true;
    double seconds = 0.0;
};

/// Runs all criteria, printing one "PASS"/"FAIL" line per criterion to `out`
/// as it goes.  `jobs` sizes the worker pool of the exhaustive sweeps.
SuiteResult run_acceptance(int jobs, std::ostream& out);

}  // namespace qt::accept
