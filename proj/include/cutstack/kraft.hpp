#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cutstack/rational.hpp"

namespace cutstack {

// A finite view of one test family's enumeration: string lengths in
// enumeration order (must be nondecreasing), plus the certified tail rule
// tail_index(delta) = smallest enumeration index m with
// sum_{i >= m} 2^{-l_i} <= delta. For block-enumerated families the rule
// returns block starts.
struct EnumeratedFamily {
    std::vector<long> lengths;
    std::function<size_t(const Rat&)> tail_index;
};

// Nondecreasing unbounded length-discount built from a rate certificate:
// strings enumerated at index >= tail_index(2^-2j) get nu = j. Evaluated on
// lengths via the (nondecreasing) index-to-length map; lengths beyond the
// enumerated range extend by +1 per doubling of the length (the documented
// rule for degenerate families).
struct NuFunction {
    std::vector<std::pair<long, long>> length_steps; // (first length with value, value)
    long last_length = 0;                            // end of the observed range

    long at(long length) const;
};

NuFunction derive_nu(const EnumeratedFamily& fam, long j_max = 20);

// rho(n) = floor(sqrt(nu(n))) with witness w(n) = ceil(sqrt(nu(n))):
// rho * w <= nu pointwise, rho nondecreasing unbounded.
struct RhoFunction {
    NuFunction nu;
    long rho(long n) const;
    long witness(long n) const;
};
RhoFunction derive_rho(const NuFunction& nu);

// Prefix-free code built by the online Kraft assignment: each string gets a
// codeword of length max(1, l - nu(l) + c). Allocation is tightest-fit
// (deepest free block no deeper than the target, lexicographically first),
// which reproduces the textbook assignment. Throws
// certificate_violation_error when the Kraft mass runs out (a wrong nu).
class KraftCode {
public:
    // strings given in enumeration order
    KraftCode(const std::vector<std::string>& strings, const NuFunction& nu, long c);

    const std::string& encode(const std::string& x) const;
    const std::string& decode(const std::string& codeword) const;
    bool prefix_free() const;
    Rat kraft_sum() const; // sum over codewords of 2^-len, exact
    long normalizer() const { return c_; }
    const std::vector<std::pair<std::string, std::string>>& pairs() const { return pairs_; }

private:
    long c_ = 0;
    std::vector<std::pair<std::string, std::string>> pairs_; // (x, codeword)
    std::map<std::string, std::string> enc_, dec_;
};

// Picks the smallest normalizer c >= 0 for which the assignment succeeds and
// returns the code (records c).
KraftCode kraft_code(const std::vector<std::string>& strings, const NuFunction& nu);

} // namespace cutstack
