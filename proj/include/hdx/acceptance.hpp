#pragma once

#include <string>
#include <vector>

#include "hdx/json_io.hpp"

namespace hdx {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    /** Deterministic report over all criteria; repeated runs match byte
     *  for byte, which the determinism criterion itself exercises. */
    Json report;
};

/**
 * Runs the full verification battery over built-in fixtures with fixed
 * seeds: exact weight identities, factorizations, localization energy
 * identities, descent chains, decomposition ladders under two solver
 * regularizations, spectral and indicator mixing bounds, the complete
 * complex trend, the advisory non-lazy bound, and a byte-level
 * determinism check of the battery's own report.
 */
SuiteResult run_acceptance_suite();

}  // namespace hdx
