#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cutstack/certified.hpp"
#include "cutstack/lz78.hpp"
#include "cutstack/supermartingale.hpp"

namespace cutstack {

// Pluggable codelength proxy; LZ78 is the default coder.
using Codelength = std::function<long(const std::vector<int>&)>;
Codelength lz78_coder();

// -log2 P(x) - codelength(x), as an exact value when P(x) is dyadic and an
// enclosure otherwise (outward rounding, so <=-assertions against hi are
// rigorous). Throws undefined_deficiency_error when P(x) = 0.
struct DeficiencyRecord {
    std::string x;
    long codelength = 0;
    bool exact = false;
    Rat value;    // set when exact
    Rat lo, hi;   // enclosure endpoints (equal to value when exact)
};

DeficiencyRecord proxy_deficiency(const std::vector<int>& x, const CylinderMeasure& p,
                                  const Codelength& coder);

// Exact count of length-n strings with codelength < n - m. The injective-code
// counting bound says this is < 2^(n-m).
struct IncompressibilityCount {
    BigInt count;
    BigInt bound; // 2^(n-m), or 1 when m >= n
    bool within_bound = false;
};
IncompressibilityCount incompressibility_count(const Codelength& coder, long n, long m,
                                               long budget_n = 20);

// Empirical extension-penalty constant: c_emp = cl(x) - cl(bx) - 2 log2 l(b)
// per pair (0 for empty b), reported as an enclosure upper bound.
struct ExtensionPenaltyReport {
    long pairs = 0;
    Rat max_c_emp; // upper endpoint over the corpus
};
ExtensionPenaltyReport extension_penalty_check(const Codelength& coder,
                                               const std::vector<std::pair<std::vector<int>,
                                                                           std::vector<int>>>& corpus);

} // namespace cutstack
