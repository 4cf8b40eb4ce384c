#pragma once

#include <string>

#include "cutstack/errors.hpp"
#include "cutstack/rational.hpp"

namespace cutstack {

// Half-open interval [lo, hi), 0 <= lo < hi in all uses here.
struct Interval {
    Rat lo, hi;

    Interval() = default;
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (!(lo < hi)) throw invalid_parameter_error("empty interval [" + lo.str() + "," + hi.str() + ")");
    }

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x < hi; }
    // half-open semantics: touching endpoints do not overlap
    bool overlaps(const Interval& o) const { return lo < o.hi && o.lo < hi; }
    bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
    std::string str() const { return "[" + lo.str() + ", " + hi.str() + ")"; }
};

} // namespace cutstack
