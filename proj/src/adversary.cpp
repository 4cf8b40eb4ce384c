#include "cutstack/adversary.hpp"

#include <algorithm>
#include <fstream>

#include "cutstack/errors.hpp"
#include "cutstack/lz78.hpp"
#include "cutstack/rng.hpp"
#include "cutstack/solovay.hpp"
#include "cutstack/walk.hpp"

namespace cutstack {

ConstructionState build_construction(const ExperimentConfig& cfg) {
    SigmaFunction sigma = cfg.sigma();
    HeightSchedule sched = derive_height_schedule(sigma, cfg.r, cfg.stages);
    ConstructionState st = init_construction(cfg.r, sched, cfg.delta_scrambled);
    st.find_R_cap = cfg.find_R_cap;
    for (long s = 1; s <= cfg.stages; ++s) construction_step(st);
    return st;
}

namespace {

// ones count of a materialized lambda column under the partition, cached
struct BranchStats {
    std::vector<long> ones;    // per column
    std::vector<long> heights; // per column
};

BranchStats branch_stats(const Gadget& lambda, const PartitionSpec& part) {
    BranchStats bs;
    for (const auto& col : lambda.columns) {
        auto nm = column_name(col, part);
        bs.ones.push_back(static_cast<long>(std::count(nm.begin(), nm.end(), 1)));
        bs.heights.push_back(col.height());
    }
    return bs;
}

} // namespace

AdversaryTrace build_adversary(const ExperimentConfig& cfg,
                               const std::optional<std::string>& violation_path) {
    ConstructionState st = build_construction(cfg);
    return build_adversary(cfg, st, violation_path);
}

AdversaryTrace build_adversary(const ExperimentConfig& cfg, const ConstructionState& st,
                               const std::optional<std::string>& violation_path) {
    if (st.s < 1) throw invalid_parameter_error("construction has no stages");
    {
        // the walk lives inside one final-stage column; its height must cover
        // the horizon
        long min_h = classes_min_height(st.pi_classes);
        if (min_h < cfg.horizon)
            throw adversary_budget_error("final stage height " + std::to_string(min_h) +
                                         " is below the horizon " + std::to_string(cfg.horizon) +
                                         "; raise stages");
    }
    PartitionSpec part(cfg.r);
    SigmaFunction sigma = cfg.sigma();

    // per-ladder-level column stats for steering at materialized joints
    std::vector<BranchStats> stats(st.ladder.size());
    for (size_t i = 0; i < st.ladder.size(); ++i)
        if (st.ladder[i].lambda_materialized) stats[i] = branch_stats(st.ladder[i].lambda, part);

    LadderWalk walk(st, part);
    Lz78Stream lz;
    SplitMix64 rng(cfg.seed);

    AdversaryTrace trace;
    trace.horizon = cfg.horizon;
    for (const auto& rec : st.records) {
        trace.stage_R.push_back(rec.R);
        trace.defects.push_back(rec.defect);
    }

    const Rat two_r = Rat(2) * cfg.r;
    bool even_phase = false; // flipped before each phase; first phase is odd

    // steering policies
    auto steer_odd = [&](const JointChoice& jc) -> size_t {
        if (!jc.lambda_direct) return 0; // descend into the Pi part
        const BranchStats& bs = stats[static_cast<size_t>(jc.stage - 1)];
        // admissible: column ones-frequency <= 2r; pick seeded among them,
        // falling back to the global minimum
        std::vector<size_t> adm;
        for (size_t i = 0; i < bs.ones.size(); ++i)
            if (Rat(bs.ones[i], bs.heights[i]) <= two_r) adm.push_back(i);
        if (!adm.empty()) return adm[static_cast<size_t>(rng.below(adm.size()))];
        size_t best = 0;
        for (size_t i = 1; i < bs.ones.size(); ++i)
            if (Rat(bs.ones[i], bs.heights[i]) < Rat(bs.ones[best], bs.heights[best])) best = i;
        return best;
    };
    auto steer_even = [&](const JointChoice& jc) -> size_t {
        if (!jc.lambda_direct) return 1;     // Delta'' branch
        return jc.num_options - 1;           // Delta'' is the last lambda column
    };

    auto neg_log2_width_hi = [&]() {
        return IReal::from_rat(walk.cylinder_width(), 256).log2().neg().upper_rat();
    };

    auto record_checkpoint = [&](bool even) {
        Checkpoint cp;
        cp.n = walk.position();
        cp.even_phase = even;
        cp.frequency = walk.running_frequency();
        cp.lz78_bits = lz.codelength();
        cp.neg_log2_width_hi = neg_log2_width_hi();
        cp.deficiency_hi = cp.neg_log2_width_hi - Rat(cp.lz78_bits);
        trace.checkpoints.push_back(cp);
        Rat bound = Rat(sigma(cp.n)) + Rat(cfg.c_slack);
        if (cp.deficiency_hi > bound && trace.sigma_violation_at < 0) {
            trace.sigma_violation_at = cp.n;
            if (violation_path) {
                std::ofstream out(*violation_path);
                out << bits_to_string(walk.name()) << "\n";
            }
            throw adversary_budget_error(
                "proxy deficiency " + cp.deficiency_hi.str() + " exceeds sigma(n)+c_slack at n=" +
                std::to_string(cp.n));
        }
    };

    long next_cp = cfg.checkpoint_every;
    for (size_t phase = 0; phase < cfg.phase_plan.size() && walk.position() < cfg.horizon;
         ++phase) {
        even_phase = (phase % 2 == 1);
        long phase_start = walk.position();
        long phase_len = std::min(cfg.phase_plan[phase], cfg.horizon - phase_start);
        long ones_start = static_cast<long>(std::count(walk.name().begin(), walk.name().end(), 1));

        if (even_phase) {
            // candidate segment lengths (nested prefixes of the all-Delta
            // routing); the LZ78 proxy is maximized over them, which picks
            // the longest since nested segments only add codelength
            std::vector<long> candidates;
            for (int c = 0; c < 4; ++c) {
                long cut = phase_len - static_cast<long>(rng.below(4)) * 76;
                candidates.push_back(std::max<long>(phase_len / 2, cut));
            }
            long chosen = *std::max_element(candidates.begin(), candidates.end());
            phase_len = chosen;
        }

        const Steerer steer = even_phase ? Steerer(steer_even) : Steerer(steer_odd);
        for (long t = 0; t < phase_len; ++t) {
            int sym = walk.step(steer);
            lz.push(sym);
            if (walk.position() == next_cp) {
                record_checkpoint(even_phase);
                next_cp += cfg.checkpoint_every;
            }
        }
        if (trace.checkpoints.empty() || trace.checkpoints.back().n != walk.position())
            record_checkpoint(even_phase); // phase boundary
        if (!even_phase) {
            long ones_ext = static_cast<long>(std::count(walk.name().begin(), walk.name().end(), 1)) -
                            ones_start;
            long len_ext = walk.position() - phase_start;
            if (len_ext > 0 && Rat(ones_ext, len_ext) > two_r)
                throw adversary_budget_error("odd phase frequency " +
                                             Rat(ones_ext, len_ext).str() + " exceeds 2r");
        }
    }
    // run out any remaining horizon in an odd tail phase
    while (walk.position() < cfg.horizon) {
        int sym = walk.step(steer_odd);
        lz.push(sym);
        if (walk.position() == next_cp) {
            record_checkpoint(false);
            next_cp += cfg.checkpoint_every;
        }
    }
    if (trace.checkpoints.empty() || trace.checkpoints.back().n != walk.position())
        record_checkpoint(even_phase);

    trace.name = walk.name();
    return trace;
}

OscillationReport compression_oscillation(const AdversaryTrace& trace) {
    OscillationReport rep;
    bool have_even = false, have_odd = false;
    for (const auto& cp : trace.checkpoints) {
        Rat ratio = Rat(cp.lz78_bits) / Rat(cp.n);
        if (cp.even_phase) {
            if (!have_even || ratio > rep.max_even_ratio) {
                rep.max_even_ratio = ratio;
                rep.max_even_at = cp.n;
            }
            have_even = true;
        } else {
            if (!have_odd || ratio < rep.min_odd_ratio) {
                rep.min_odd_ratio = ratio;
                rep.min_odd_at = cp.n;
            }
            have_odd = true;
        }
    }
    if (have_even && have_odd) rep.gap = rep.max_even_ratio - rep.min_odd_ratio;
    return rep;
}

} // namespace cutstack
