#pragma once

#include <string>
#include <vector>

#include "cutstack/rational.hpp"
#include "cutstack/sigma.hpp"

namespace cutstack {

// Run configuration; every output byte is a function of this struct.
struct ExperimentConfig {
    Rat r = Rat(1, 64);
    std::string sigma_spec = "identity";
    long stages = 5;
    long horizon = 1L << 15;
    uint64_t seed = 1;
    long c_slack = 32;
    // phase lengths, alternating odd (low-frequency) / even (delta-routed),
    // starting with an odd phase
    std::vector<long> phase_plan = {1024, 3072, 12288, 4096, 12288};
    long checkpoint_every = 1024;
    long find_R_cap = 1L << 22;
    bool delta_scrambled = true;
    std::string out_dir = "out";

    SigmaFunction sigma() const { return SigmaFunction::parse(sigma_spec); }

    static ExperimentConfig from_json_file(const std::string& path);
    static ExperimentConfig from_json_text(const std::string& text);
    std::string to_json() const;
};

} // namespace cutstack
