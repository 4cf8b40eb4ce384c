#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cutstack/defect.hpp"
#include "cutstack/gadget.hpp"
#include "cutstack/schedule.hpp"

namespace cutstack {

// Initial gadgets: Delta_0 = single column of height 2*h0 stacked from the
// 2*h0 equal parts of [1/2-r, 1/2+r); Pi_0 = single column of height 2*h0
// stacked from the parts of [0, 1/2-r) and [1/2+r, 1), bottom to top.
// When `scrambled_delta` is set (default), Delta_0's parts are stacked in a
// fixed balanced order drawn from a frozen shuffle constant, so its partition
// name is a fixed pattern with h0 zeros and h0 ones and diverse windows;
// `false` stacks them left to right (name 0^h0 1^h0).
std::pair<Gadget, Gadget> init_gadgets(const Rat& r, long h0, bool scrambled_delta = true);

// Smallest probed M (doubling then binary refinement) with
// min_height(g^{*(M)}) >= min_height and defect(g, g^{*(M)}) < epsilon.
// Defect verdicts are exact or MPFR-certified. Throws
// construction_budget_error past `cap`.
long find_R(const std::vector<ColumnClass>& lambda, long min_height, const Rat& epsilon,
            long cap);
long find_R(const Gadget& lambda, long min_height, const Rat& epsilon, long cap);

// Per-stage record of the construction.
struct StageRecord {
    long s = 0;
    long R = 0;        // R_s used for Pi_s
    long R_delta = 0;  // R'_s used for Delta_s
    Rat defect;        // exact value, or certified upper bound when !defect_is_exact
    bool defect_is_exact = true;
    Rat gamma;         // lambda(D''^) / lambda(Pi_{s-1}^)
    Rat pi_support, delta_support, pi_width, delta_width;
    long pi_min_height = 0, delta_height = 0;
    BigInt pi_columns;
};

// One rung of the ladder the trajectory walker climbs. Lambda_s is
// Pi_{s-1} u Delta''_s with Pi columns first and Delta'' last; it is kept
// materialized while Pi_{s-1} is.
struct LadderLevel {
    long s = 0;
    long R = 1;
    bool lambda_materialized = false;
    Gadget lambda;           // set when materialized
    Column delta_col;        // Delta''_s
    Rat pi_part_width;       // w(Pi_{s-1})
    Rat delta_part_width;    // w(Delta''_s)
};

struct ConstructionState {
    long s = 0;
    Rat r;
    HeightSchedule schedule;

    bool pi_materialized = true;
    Gadget pi;                            // Pi_s when materialized
    std::vector<ColumnClass> pi_classes;  // always maintained
    Column delta;                         // Delta_s (single column throughout)

    std::vector<StageRecord> records;     // records[i] is stage i+1
    std::vector<LadderLevel> ladder;      // ladder[i] is stage i+1
    std::vector<Rat> defect_history;      // defect_history[i] is stage i+1

    long find_R_cap = 1L << 22;
    size_t materialize_budget = 1u << 21; // interval-count budget for Pi_s
    bool delta_scrambled = true;

    Rat pi_support() const { return classes_support(pi_classes); }
    Rat delta_support() const { return delta.support_measure(); }
};

// Stage-0 state for the given schedule.
ConstructionState init_construction(const Rat& r, const HeightSchedule& schedule,
                                    bool scrambled_delta = true);

// Advances the state one stage: cut Delta into halves, merge Delta'' into
// Pi, find R_s, R_s'-fold Delta'. Maintains the support identities exactly
// and (for materialized stages) re-verifies the defect through the
// provenance route.
void construction_step(ConstructionState& st);

// Column of lambda^{*(R)} addressed by its slot sequence, with the exact
// relative window each slot occupies inside its Lambda column. Mirrors
// m_fold_independent's cutting cascade; used to enumerate implicit stages.
struct ImplicitColumn {
    std::vector<size_t> slots;
    Rat width;
    std::vector<std::pair<Rat, Rat>> windows; // per slot: (start, width), relative
};
ImplicitColumn implicit_column(const Gadget& lambda, long R, const std::vector<size_t>& slots);

} // namespace cutstack
