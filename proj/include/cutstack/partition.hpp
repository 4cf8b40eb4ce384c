#pragma once

#include <vector>

#include "cutstack/gadget.hpp"

namespace cutstack {

// Two-cell partition of [0,1): pi1 = [1/2, 1/2+r), pi0 = the complement.
// chi(x) = 1 iff x lies in pi1.
struct PartitionSpec {
    Rat r;

    explicit PartitionSpec(Rat r_in);

    int chi(const Rat& x) const;
    // label of a level wholly inside one cell; -1 if it straddles a boundary
    int level_label(const Interval& iv) const;

    Rat pi1_lo() const { return Rat(1, 2); }
    Rat pi1_hi() const { return Rat(1, 2) + r; }
};

// Cuts every column whose levels straddle a boundary of the partition
// vertically (through its full height) until each level lies wholly inside
// pi0 or pi1. Terminates because r is dyadic and endpoints rational.
Gadget refine_for_partition(const Gadget& g, const PartitionSpec& part);

// Labels of all levels of a column; requires the column to be refined.
std::vector<int> column_name(const Column& c, const PartitionSpec& part);

} // namespace cutstack
