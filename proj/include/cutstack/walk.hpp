#pragma once

#include <functional>
#include <vector>

#include "cutstack/construction.hpp"
#include "cutstack/partition.hpp"

namespace cutstack {

// Branch offered at a stack joint of stage s: either one column of the
// materialized Lambda_s, or (for implicit stages) the Pi-part as a whole
// (resolved lazily one level down) or the Delta'' column.
struct JointChoice {
    long stage = 0;          // joint's stage
    bool lambda_direct;      // true: choose among lambda columns directly
    size_t num_options = 0;  // lambda columns, or 2 (Pi-part / Delta'')
};

// Steering policy: given the joint, returns the chosen option index.
// For lambda_direct joints options are lambda column indices (Delta'' last);
// otherwise option 0 = Pi-part, 1 = Delta''.
using Steerer = std::function<size_t(const JointChoice&)>;

// Lazy trajectory walker over the construction ladder. Runs inside one
// column of the final stage gadget; every slot boundary at every stage with
// R >= 2 is a steering joint. Tracks the partition name and the exact width
// of the steering cylinder (the set of start points following the same
// choices).
class LadderWalk {
public:
    LadderWalk(const ConstructionState& st, const PartitionSpec& part);

    // emits the next symbol (0/1); consults the steerer at joints
    int step(const Steerer& steer);

    long position() const { return n_; }
    // -log2 of the steering cylinder width, as an exact rational log when the
    // width is a power of two times small factors: we keep the width itself
    const Rat& cylinder_width() const { return width_; }
    const std::vector<int>& name() const { return name_; }

    // ones frequency of the emitted name so far
    Rat running_frequency() const;

private:
    struct Frame {
        // a materialized column being walked
        const Column* col = nullptr;
        std::vector<int> labels;
        long level = 0;
        // or an implicit stage frame: remaining slots at `stage`
        long stage = 0;
        long slots_left = 0;
    };

    const ConstructionState& st_;
    PartitionSpec part_;
    std::vector<Frame> stack_;
    std::vector<int> name_;
    Rat width_ = 1;
    long n_ = 0;
    long ones_ = 0;

    void enter_stage_column(long stage, const Steerer& steer);
    void enter_lambda_branch(long stage, const Steerer& steer);
    void push_column(const Column& col);
};

} // namespace cutstack
