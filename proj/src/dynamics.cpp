#include "cutstack/dynamics.hpp"

#include <algorithm>

namespace cutstack {

PointLocation locate(const Gadget& g, const Rat& x) {
    for (size_t ci = 0; ci < g.columns.size(); ++ci) {
        const auto& col = g.columns[ci];
        for (long j = 0; j < col.height(); ++j) {
            if (col.levels[static_cast<size_t>(j)].contains(x))
                return PointLocation{ci, j, x};
        }
    }
    throw outside_support_error("point " + x.str() + " lies outside the gadget support");
}

std::optional<Rat> apply_T(const Gadget& g, const Rat& x) {
    PointLocation loc = locate(g, x);
    const Column& col = g.columns[loc.column];
    if (loc.level + 1 >= col.height()) return std::nullopt; // top level
    const Interval& cur = col.levels[static_cast<size_t>(loc.level)];
    const Interval& nxt = col.levels[static_cast<size_t>(loc.level + 1)];
    return nxt.lo + (x - cur.lo);
}

std::vector<int> trajectory_name(const Gadget& g, const PartitionSpec& part, size_t column,
                                 long level, long len) {
    if (column >= g.columns.size()) throw invalid_parameter_error("column index out of range");
    const Column& col = g.columns[column];
    if (level < 0 || level >= col.height()) throw invalid_parameter_error("level index out of range");
    long remaining = col.height() - level;
    if (len > remaining)
        throw trajectory_too_short_error("trajectory of length " + std::to_string(len) +
                                         " requested, only " + std::to_string(remaining) +
                                         " levels remain");
    std::vector<int> name;
    name.reserve(static_cast<size_t>(len));
    for (long j = 0; j < len; ++j) {
        int l = part.level_label(col.levels[static_cast<size_t>(level + j)]);
        if (l < 0)
            throw invalid_parameter_error("gadget not refined for the partition at level " +
                                          std::to_string(level + j));
        name.push_back(l);
    }
    return name;
}

Rat cylinder_measure(const Gadget& g, const PartitionSpec& part, const std::vector<int>& x) {
    Rat total = 0;
    long n = static_cast<long>(x.size());
    for (const auto& col : g.columns) {
        std::vector<int> name = column_name(col, part);
        long h = col.height();
        for (long j = 0; j < h && j + n <= h; ++j) {
            bool match = true;
            for (long t = 0; t < n; ++t) {
                if (name[static_cast<size_t>(j + t)] != x[static_cast<size_t>(t)]) {
                    match = false;
                    break;
                }
            }
            if (match) total += col.width();
        }
    }
    return total;
}

Rat ergodic_average(const Gadget& g, const PartitionSpec& part, size_t column, long level, long n) {
    if (n <= 0) throw invalid_parameter_error("ergodic average needs n >= 1");
    std::vector<int> name = trajectory_name(g, part, column, level, n);
    long ones = std::count(name.begin(), name.end(), 1);
    return Rat(ones, n);
}

std::string name_to_string(const std::vector<int>& name) {
    std::string s;
    s.reserve(name.size());
    for (int b : name) s.push_back(b ? '1' : '0');
    return s;
}

} // namespace cutstack
