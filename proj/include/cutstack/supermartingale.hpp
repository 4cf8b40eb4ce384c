#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cutstack/rational.hpp"

namespace cutstack {

// Computable measure given as an exact cylinder evaluator P(x). Must satisfy
// P(x) = P(x0) + P(x1) on the probed range and P(empty) <= 1.
using CylinderMeasure = std::function<Rat(const std::string&)>;

CylinderMeasure uniform_measure();

// Supermartingale for P, given as an exact value table (default 1 outside).
class Supermartingale {
public:
    Supermartingale() = default;
    explicit Supermartingale(std::map<std::string, Rat> table, Rat fallback = Rat(1))
        : table_(std::move(table)), fallback_(std::move(fallback)) {}

    Rat value(const std::string& x) const {
        auto it = table_.find(x);
        return it == table_.end() ? fallback_ : it->second;
    }

private:
    std::map<std::string, Rat> table_;
    Rat fallback_ = Rat(1);
};

// One violated node of the supermartingale inequality.
struct SupermartingaleViolation {
    std::string x;
    Rat lhs, rhs; // M(x) vs M(x0)P(0|x) + M(x1)P(1|x)
};

// Checks M(x) >= M(x0)P(0|x) + M(x1)P(1|x) exactly on the full binary tree
// to the given depth (and M(empty) <= 1); reports all violations.
std::vector<SupermartingaleViolation> supermartingale_check(const Supermartingale& m,
                                                            const CylinderMeasure& p, long depth);

// Bounded-increase selection: from a set A of extensions of x, removes the
// extensions whose path crosses the threshold M(x) / ((1-mu) P(A~|x)), using
// first-crossing (minimal) witness prefixes. Guarantees P(A'~) > mu P(A~) and
// M(y^j) (1-mu) P(A~|x) <= M(x) for every surviving y and every j in
// [|x|, |y|] - the multiplicative form of the log bound, checked exactly.
struct SelectionResult {
    std::vector<std::string> kept;             // A'
    std::vector<std::string> witness_prefixes; // the pruned first-crossing prefixes
    Rat a_measure, kept_measure;               // P(A~), P(A'~)
    Rat threshold_num;                         // M(x)
    Rat threshold_den;                         // (1-mu) P(A~|x)
};

SelectionResult bounded_increase_select(const Supermartingale& m, const CylinderMeasure& p,
                                        const std::string& x, const std::vector<std::string>& a,
                                        const Rat& mu);

} // namespace cutstack
