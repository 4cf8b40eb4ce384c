#include "cutstack/gadget.hpp"

#include <algorithm>

namespace cutstack {

Rat Column::support_measure() const {
    Rat m = 0;
    for (const auto& iv : levels) m += iv.width();
    return m;
}

Rat Gadget::width() const {
    Rat w = 0;
    for (const auto& c : columns) w += c.width();
    return w;
}

Rat Gadget::support_measure() const {
    Rat m = 0;
    for (const auto& c : columns) m += c.support_measure();
    return m;
}

long Gadget::min_height() const {
    long h = 0;
    for (const auto& c : columns) h = (h == 0) ? c.height() : std::min(h, c.height());
    return h;
}

long Gadget::max_height() const {
    long h = 0;
    for (const auto& c : columns) h = std::max(h, c.height());
    return h;
}

std::vector<Rat> Gadget::distribution() const {
    Rat w = width();
    std::vector<Rat> d;
    d.reserve(columns.size());
    for (const auto& c : columns) d.push_back(c.width() / w);
    return d;
}

Gadget Gadget::with_self_provenance() const {
    Gadget g = *this;
    for (size_t i = 0; i < g.columns.size(); ++i)
        g.columns[i].provenance = {{static_cast<int>(i), g.columns[i].height()}};
    return g;
}

Gadget Gadget::without_provenance() const {
    Gadget g = *this;
    for (auto& c : g.columns) c.provenance.clear();
    return g;
}

void Gadget::check_invariants() const {
    // equal widths within a column, disjointness across all levels of the gadget
    std::vector<const Interval*> all;
    for (const auto& c : columns) {
        if (c.levels.empty()) throw invalid_parameter_error("column with no levels");
        Rat w = c.width();
        for (const auto& iv : c.levels) {
            if (iv.width() != w)
                throw invalid_parameter_error("column levels have unequal widths");
            all.push_back(&iv);
        }
    }
    std::sort(all.begin(), all.end(),
              [](const Interval* a, const Interval* b) { return a->lo < b->lo; });
    for (size_t i = 1; i < all.size(); ++i) {
        if (all[i - 1]->hi > all[i]->lo)
            throw invalid_parameter_error("overlapping intervals " + all[i - 1]->str() + " and " +
                                          all[i]->str());
    }
}

Gadget gadget_union(const Gadget& a, const Gadget& b) {
    Gadget g = a;
    g.columns.insert(g.columns.end(), b.columns.begin(), b.columns.end());
    g.check_invariants();
    return g;
}

} // namespace cutstack
