#include "cutstack/supermartingale.hpp"

#include <algorithm>
#include <set>

#include "cutstack/errors.hpp"

namespace cutstack {

CylinderMeasure uniform_measure() {
    return [](const std::string& x) { return Rat::pow2(-static_cast<long>(x.size())); };
}

std::vector<SupermartingaleViolation> supermartingale_check(const Supermartingale& m,
                                                            const CylinderMeasure& p, long depth) {
    std::vector<SupermartingaleViolation> out;
    if (m.value("") > Rat(1)) out.push_back({"", m.value(""), Rat(1)});
    std::vector<std::string> frontier{""};
    for (long d = 0; d < depth; ++d) {
        std::vector<std::string> next;
        for (const auto& x : frontier) {
            Rat px = p(x);
            if (px.is_zero()) continue;
            Rat p0 = p(x + "0") / px, p1 = p(x + "1") / px;
            Rat rhs = m.value(x + "0") * p0 + m.value(x + "1") * p1;
            if (m.value(x) < rhs) out.push_back({x, m.value(x), rhs});
            next.push_back(x + "0");
            next.push_back(x + "1");
        }
        frontier = std::move(next);
    }
    return out;
}

SelectionResult bounded_increase_select(const Supermartingale& m, const CylinderMeasure& p,
                                        const std::string& x, const std::vector<std::string>& a,
                                        const Rat& mu) {
    if (!(mu > Rat(0) && mu < Rat(1)))
        throw invalid_parameter_error("mu must lie in (0,1)");
    if (a.empty()) throw invalid_selection_error("empty extension set");
    Rat px = p(x);
    if (px.is_zero()) throw invalid_selection_error("P(x) = 0");
    for (const auto& y : a)
        if (y.size() < x.size() || y.compare(0, x.size(), x) != 0)
            throw invalid_selection_error("A must consist of extensions of x");

    // P(A~): measure of the union of cylinders; prune nested extensions first
    // (keep minimal elements: the union is determined by them)
    std::vector<std::string> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::string> minimal;
    for (const auto& y : sorted) {
        if (!minimal.empty() && y.compare(0, minimal.back().size(), minimal.back()) == 0 &&
            y.size() >= minimal.back().size())
            continue; // y extends a kept element; its cylinder is contained
        minimal.push_back(y);
    }
    Rat a_meas = 0;
    for (const auto& y : minimal) a_meas += p(y);
    if (a_meas.is_zero()) throw invalid_selection_error("P(A~) = 0");

    // threshold: M(y^j) > M(x) / ((1-mu) P(A~|x))  <=>  M(y^j) * den > num
    Rat num = m.value(x);
    Rat den = (Rat(1) - mu) * (a_meas / px);

    // first-crossing witness prefixes over the prefix tree of A
    std::set<std::string> witnesses;
    for (const auto& y : minimal) {
        for (size_t j = x.size(); j <= y.size(); ++j) {
            std::string pre = y.substr(0, j);
            if (m.value(pre) * den > num) {
                witnesses.insert(pre);
                break;
            }
        }
    }
    SelectionResult res;
    res.a_measure = a_meas;
    res.threshold_num = num;
    res.threshold_den = den;
    res.witness_prefixes.assign(witnesses.begin(), witnesses.end());
    auto pruned = [&](const std::string& y) {
        for (const auto& w : witnesses)
            if (y.size() >= w.size() && y.compare(0, w.size(), w) == 0) return true;
        return false;
    };
    // A' keeps every original element not extending a witness; its union
    // measure is the sum over the surviving minimal antichain
    for (const auto& y : a)
        if (!pruned(y)) res.kept.push_back(y);
    Rat kept_meas = 0;
    for (const auto& y : minimal)
        if (!pruned(y)) kept_meas += p(y);
    res.kept_measure = kept_meas;
    return res;
}

} // namespace cutstack
