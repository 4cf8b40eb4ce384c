#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cutstack/gadget.hpp"
#include "cutstack/partition.hpp"

namespace cutstack {

// Location of a point inside a gadget: column index, level index (0-based),
// and the point itself.
struct PointLocation {
    size_t column = 0;
    long level = 0;
    Rat point;
};

// Finds the level containing x (outside_support_error if none).
PointLocation locate(const Gadget& g, const Rat& x);

// One step of the column map: translate x from its level onto the next level
// of the same column. Returns nullopt when x sits in a top level (the map is
// undefined there at this stage).
std::optional<Rat> apply_T(const Gadget& g, const Rat& x);

// Partition name of the trajectory that starts at `start` (column, level) and
// runs `len` steps upward within its column. The gadget must be refined for
// the partition (trajectory_too_short_error when len exceeds the remaining
// height).
std::vector<int> trajectory_name(const Gadget& g, const PartitionSpec& part, size_t column,
                                 long level, long len);

// P(x) at this stage: total width of levels (with remaining height >= |x|)
// whose forward name extends x.
Rat cylinder_measure(const Gadget& g, const PartitionSpec& part, const std::vector<int>& x);

// Birkhoff average of chi_{pi1} along the trajectory: (#1s in the name) / n.
Rat ergodic_average(const Gadget& g, const PartitionSpec& part, size_t column, long level, long n);

std::string name_to_string(const std::vector<int>& name);

} // namespace cutstack
