#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutstack/config.hpp"
#include "cutstack/construction.hpp"

namespace cutstack {

struct Checkpoint {
    long n = 0;
    bool even_phase = false;
    Rat frequency;      // ones frequency of the name prefix
    long lz78_bits = 0; // running codelength of the prefix
    Rat neg_log2_width_hi; // certified upper bound on -log2(cylinder width)
    Rat deficiency_hi;     // neg_log2_width_hi - lz78_bits
};

struct AdversaryTrace {
    std::vector<Checkpoint> checkpoints;
    std::vector<int> name;
    std::vector<long> stage_R;     // R_1..R_S of the underlying construction
    std::vector<Rat> defects;      // defect_history of the construction
    long horizon = 0;
    long sigma_violation_at = -1;  // checkpoint n of the first deficiency violation, if any
};

// Runs the alternating odd/even induction over the construction ladder:
// odd phases steer every joint toward the lowest-ones branch (asserting
// ones-frequency <= 2r over the extension), even phases route through the
// Delta'' branch at every joint, picking among the seeded nested candidate
// segments the one maximizing the LZ78 proxy. Checkpoints at phase
// boundaries and every checkpoint_every symbols; asserts proxy deficiency
// <= sigma(n) + c_slack at each (violations serialize the prefix to
// violation_path and throw adversary_budget_error).
AdversaryTrace build_adversary(const ExperimentConfig& cfg,
                               const std::optional<std::string>& violation_path = std::nullopt);

// As above but reusing an already-built construction (the state must match
// the config's r/sigma/stages).
AdversaryTrace build_adversary(const ExperimentConfig& cfg, const ConstructionState& st,
                               const std::optional<std::string>& violation_path = std::nullopt);

struct OscillationReport {
    Rat max_even_ratio;  // max lz78/n over even-phase checkpoints
    Rat min_odd_ratio;   // min over odd-phase checkpoints
    Rat gap;             // max_even - min_odd
    long max_even_at = 0, min_odd_at = 0;
};

OscillationReport compression_oscillation(const AdversaryTrace& trace);

// Builds the construction state a config describes (shared by the CLI and
// the acceptance suite).
ConstructionState build_construction(const ExperimentConfig& cfg);

} // namespace cutstack
