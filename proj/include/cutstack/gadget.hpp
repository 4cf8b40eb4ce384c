#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cutstack/interval.hpp"

namespace cutstack {

// A column: equal-width disjoint levels, level 0 = base, level h-1 = top.
// The associated map sends each point of level j to the same offset of level
// j+1, so a column is fully described by its level intervals.
//
// `provenance` records, base to top, which column of a reference gadget each
// stacked segment was cut from: (source column index, segment height). It is
// set by Gadget::with_self_provenance(), carried through cut/stack, and is
// what well_distribution_defect consumes.
struct Column {
    std::vector<Interval> levels;
    std::vector<std::pair<int, long>> provenance;

    long height() const { return static_cast<long>(levels.size()); }
    Rat width() const { return levels.at(0).width(); }
    const Interval& base() const { return levels.front(); }
    const Interval& top() const { return levels.back(); }
    Rat support_measure() const;
    bool has_provenance() const { return !provenance.empty(); }
};

struct Gadget {
    std::vector<Column> columns;

    size_t num_columns() const { return columns.size(); }
    // w(gadget) = sum of column widths
    Rat width() const;
    // lambda(support) = total measure of all levels
    Rat support_measure() const;
    long min_height() const;
    long max_height() const;
    // distribution vector (w_i / w); entries sum to 1 exactly
    std::vector<Rat> distribution() const;

    // copy with provenance reset so that column i reads [(i, h_i)]
    Gadget with_self_provenance() const;
    Gadget without_provenance() const;

    // exact structural checks (throw on violation)
    void check_invariants() const;
};

// gadget whose columns are those of a and b; supports must be disjoint
Gadget gadget_union(const Gadget& a, const Gadget& b);

} // namespace cutstack
