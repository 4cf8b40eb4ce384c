#pragma once

#include <string>
#include <vector>

#include "cutstack/config.hpp"

namespace cutstack {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs acceptance criteria (all of them by default, or the listed subset).
// Heavy shared fixtures (the r=1/8 and r=1/64 constructions) are built once
// per call and reused across criteria.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {},
                                            bool verbose = false);

// Artifact bundle: build/simulate/tests/compress/adversary CSVs plus
// summary.json under cfg.out_dir. Returns true iff every criterion passed.
bool run_all(const ExperimentConfig& cfg, const std::vector<std::string>& only_artifacts = {});

} // namespace cutstack
