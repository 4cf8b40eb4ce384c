#pragma once

#include "cutstack/certified.hpp"
#include "cutstack/rational.hpp"

namespace cutstack {

// Binomial-sum complexity bound for low-ones-frequency strings:
//   lhs(n, r) = (1/n) log2( sum_{i=0}^{ceil(2rn)} C(n,i) ) + 2 log2(n) / n
//   rhs(r)    = -3 r log2 r
// lhs is enclosed with certified rounding from the exact big-integer sum;
// rhs is exact when r is a power of two, else an enclosure.
struct EntropyBoundResult {
    IReal lhs;
    IReal rhs;
    Rat rhs_exact;      // meaningful iff rhs_is_exact
    bool rhs_is_exact = false;
    bool holds = false; // certified lhs < rhs
};

EntropyBoundResult entropy_upper_bound(const Rat& r, long n, mpfr_prec_t prec = 192);

} // namespace cutstack
