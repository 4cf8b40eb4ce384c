#include "cutstack/partition.hpp"

#include "cutstack/gadget_ops.hpp"

namespace cutstack {

PartitionSpec::PartitionSpec(Rat r_in) : r(std::move(r_in)) {
    if (!(r > Rat(0) && r < Rat(1, 2)))
        throw invalid_parameter_error("partition requires 0 < r < 1/2");
    if (!r.is_dyadic()) throw invalid_parameter_error("partition r must be dyadic");
}

int PartitionSpec::chi(const Rat& x) const {
    return (x >= pi1_lo() && x < pi1_hi()) ? 1 : 0;
}

int PartitionSpec::level_label(const Interval& iv) const {
    if (iv.lo >= pi1_lo() && iv.hi <= pi1_hi()) return 1;
    if (iv.hi <= pi1_lo() || iv.lo >= pi1_hi()) return 0;
    return -1;
}

Gadget refine_for_partition(const Gadget& g, const PartitionSpec& part) {
    Gadget out;
    out.columns.reserve(g.columns.size());
    // worklist of columns; a straddling level at relative offset theta splits
    // the column into [0,theta) and [theta,1) slices
    std::vector<Column> work(g.columns.begin(), g.columns.end());
    std::vector<Rat> bounds = {part.pi1_lo(), part.pi1_hi()};
    while (!work.empty()) {
        Column c = std::move(work.back());
        work.pop_back();
        Rat w = c.width();
        Rat split_theta = -1;
        for (const auto& iv : c.levels) {
            for (const auto& b : bounds) {
                if (iv.lo < b && b < iv.hi) {
                    split_theta = (b - iv.lo) / w;
                    break;
                }
            }
            if (!(split_theta < Rat(0))) break;
        }
        if (split_theta < Rat(0)) {
            out.columns.push_back(std::move(c));
            continue;
        }
        Gadget single;
        single.columns.push_back(std::move(c));
        auto halves = cut_gadget(single, {split_theta, Rat(1) - split_theta});
        work.push_back(std::move(halves[0].columns[0]));
        work.push_back(std::move(halves[1].columns[0]));
    }
    return out;
}

std::vector<int> column_name(const Column& c, const PartitionSpec& part) {
    std::vector<int> name;
    name.reserve(c.levels.size());
    for (const auto& iv : c.levels) {
        int l = part.level_label(iv);
        if (l < 0)
            throw invalid_parameter_error("level " + iv.str() +
                                          " straddles a partition boundary; refine first");
        name.push_back(l);
    }
    return name;
}

} // namespace cutstack
