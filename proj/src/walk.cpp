#include "cutstack/walk.hpp"

#include "cutstack/errors.hpp"

namespace cutstack {

LadderWalk::LadderWalk(const ConstructionState& st, const PartitionSpec& part)
    : st_(st), part_(part) {
    if (st_.ladder.empty()) throw invalid_parameter_error("walk requires at least one stage");
    // start width: the column-width scale of the final stage gadget; branch
    // probabilities multiply in as choices are made
    width_ = classes_width(st_.pi_classes);
}

Rat LadderWalk::running_frequency() const {
    if (n_ == 0) return Rat(0);
    return Rat(ones_, n_);
}

void LadderWalk::push_column(const Column& col) {
    Frame f;
    f.col = &col;
    f.labels = column_name(col, part_);
    f.level = 0;
    stack_.push_back(std::move(f));
}

// Entering one column of stage `stage`'s gadget Pi_stage = Lambda^{*(R)}:
// pushes a frame holding R slots; the step loop fills them.
void LadderWalk::enter_stage_column(long stage, const Steerer& steer) {
    (void)steer;
    const LadderLevel& lv = st_.ladder.at(static_cast<size_t>(stage - 1));
    Frame f;
    f.stage = stage;
    f.slots_left = lv.R;
    stack_.push_back(f);
}

// Chooses a Lambda_stage column for the next slot (a joint) and pushes its
// walkable representation.
void LadderWalk::enter_lambda_branch(long stage, const Steerer& steer) {
    const LadderLevel& lv = st_.ladder.at(static_cast<size_t>(stage - 1));
    if (lv.lambda_materialized) {
        JointChoice jc{stage, true, lv.lambda.num_columns()};
        size_t pick = steer(jc);
        if (pick >= lv.lambda.num_columns())
            throw invalid_parameter_error("steerer picked an invalid branch");
        width_ *= lv.lambda.columns[pick].width() / lv.lambda.width();
        push_column(lv.lambda.columns[pick]);
        return;
    }
    // implicit: Pi_{stage-1} part vs Delta''
    JointChoice jc{stage, false, 2};
    size_t pick = steer(jc);
    Rat total = lv.pi_part_width + lv.delta_part_width;
    if (pick == 1) {
        width_ *= lv.delta_part_width / total;
        push_column(lv.delta_col);
        return;
    }
    width_ *= lv.pi_part_width / total;
    enter_stage_column(stage - 1, steer);
}

int LadderWalk::step(const Steerer& steer) {
    if (stack_.empty()) enter_stage_column(st_.s, steer);
    // unwind exhausted frames, filling fresh slots as they open
    for (;;) {
        Frame& f = stack_.back();
        if (f.col != nullptr) {
            if (f.level < f.col->height()) break;
            stack_.pop_back();
            continue;
        }
        if (f.slots_left > 0) {
            f.slots_left -= 1;
            long stage = f.stage;
            enter_lambda_branch(stage, steer);
            continue;
        }
        if (stack_.size() == 1)
            throw trajectory_too_short_error("walk exhausted the final stage column");
        stack_.pop_back();
    }
    Frame& f = stack_.back();
    int sym = f.labels[static_cast<size_t>(f.level)];
    f.level += 1;
    ++n_;
    ones_ += sym;
    name_.push_back(sym);
    return sym;
}

} // namespace cutstack
