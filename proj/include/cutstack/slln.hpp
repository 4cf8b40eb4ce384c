#pragma once

#include "cutstack/certified.hpp"
#include "cutstack/solovay.hpp"

namespace cutstack {

// Strong-law test family: block n holds every x of length n with
// |S_n/n - 1/2| >= eps_k, so L(U_{k,n}) obeys the concentration bound
// 2 exp(-2 n eps_k^2). Blocks are enumerated in lexicographic order.
class SllnFamily {
public:
    explicit SllnFamily(std::vector<Rat> epsilons);

    size_t num_k() const { return eps_.size(); }
    const Rat& eps(size_t k) const { return eps_.at(k); }

    // membership of a single string in U_{k,n} with n = |x|
    bool in_block(size_t k, const std::vector<int>& x) const;

    // exact L(U_{k,n}) = (sum of C(n,i) over bad i) / 2^n
    Rat block_measure(size_t k, long n) const;
    BigInt block_count(size_t k, long n) const;

    // all members of U_{k,n}, lexicographic (budget-guarded)
    std::vector<std::vector<int>> enumerate_block(size_t k, long n, size_t budget = 1u << 22) const;

    // lexicographic rank of x inside U_{k,|x|} (0-based); x must be a member
    BigInt rank_in_block(size_t k, const std::vector<int>& x) const;

    // concentration bound 2 exp(-2 n eps_k^2) as an enclosure
    IReal block_bound(size_t k, long n, mpfr_prec_t prec = 192) const;
    // certified check: exact block measure <= bound
    bool block_measure_within_bound(size_t k, long n) const;

    // rate certificate: smallest N with  sum_{n>=N} 2 exp(-2 n eps_k^2) <= delta,
    // via the exact geometric form 2 e^{-2Neps^2} / (1 - e^{-2eps^2})
    long tail_block(size_t k, const Rat& delta) const;
    // certified: exact partial sums from N plus the analytic tail stay <= delta
    bool verify_certificate(size_t k, const Rat& delta, long exact_blocks = 24) const;

    // hits of the family against a prefix: block n hits iff omega^n in U_{k,n}
    PassVerdict passes(const std::vector<int>& omega, size_t k, long horizon) const;

private:
    std::vector<Rat> eps_;
};

} // namespace cutstack
