#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cutstack/gadget.hpp"
#include "cutstack/rational.hpp"

namespace cutstack {

// Enumeration sweeps over all length-n bit strings. Each kernel has a serial
// reference path (parallel = false) and an OpenMP path; results are exact
// integer counts, identical on both paths.

// #{x in {0,1}^n : coder(x) < threshold_bits}
unsigned long long count_codelength_below(const std::function<long(const std::vector<int>&)>& coder,
                                          long n, long threshold_bits, bool parallel);

// histogram[c] = #{x in {0,1}^n : coder(x) = c}
std::vector<unsigned long long> codelength_histogram(
    const std::function<long(const std::vector<int>&)>& coder, long n, bool parallel);

// #{x in {0,1}^n : |ones(x)/n - 1/2| >= eps}
unsigned long long slln_block_count_bruteforce(long n, const Rat& eps, bool parallel);

// reflection counts over {0,1}^m with S_k = ones in the first k bits:
//   first  = #{x : max_k S_k > a}
//   second = #{x : S_m > a}
std::pair<unsigned long long, unsigned long long> reflection_counts(long m, long a, bool parallel);

// Exhaustive level-map verification of lambda^{*(R)} through the implicit
// column accessor: every non-top level's successor is checked for exact
// width equality and translation consistency, and the per-column slice
// windows are checked to tile [0,1) within each lambda column.
struct LevelMapReport {
    bool ok = false;
    unsigned long long columns_checked = 0;
    unsigned long long levels_checked = 0;
    std::string message;
};
LevelMapReport verify_stage_level_maps(const Gadget& lambda, long R, bool parallel);

} // namespace cutstack
