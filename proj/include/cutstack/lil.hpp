#pragma once

#include "cutstack/certified.hpp"
#include "cutstack/solovay.hpp"

namespace cutstack {

// Iterated-logarithm test family with block boundaries m_n = ceil(delta^n).
// Block n covers every omega with S_k - k/2 > delta sqrt((1/2) m_n lnln m_n)
// for some k in [m_n, m_{n+1}], via the prefix-free set of minimal-length
// crossing prefixes. lnln is clamped at 0 for the degenerate m_n = 2 block.
class LilFamily {
public:
    explicit LilFamily(Rat delta);

    const Rat& delta() const { return delta_; }

    // m_n = ceil(delta^n), exact
    BigInt block_boundary(long n) const;

    // certified: does the half-integer S - k/2 exceed the block-n threshold?
    bool crosses(long n, const Rat& s_minus_half_k) const;
    // enclosure of the block-n threshold (positive blocks only)
    IReal threshold_enclosure(long n, mpfr_prec_t prec) const;

    // minimal-length crossing prefixes of block n, sorted by (length, lex);
    // requires m_{n+1} <= max_len_budget
    std::vector<std::vector<int>> enumerate_block(long n, long max_len_budget = 24) const;

    // exact L(~U_{delta,n}) of an enumerable block
    Rat block_measure(long n, long max_len_budget = 24) const;

    // certified per-block bound 2 exp(-delta^2 (m_n / m_{n+1}) lnln m_n)
    IReal block_bound(long n, mpfr_prec_t prec = 192) const;

    // first block where the p-series certificate chain applies
    long certificate_start() const;
    // rate certificate: smallest block N >= certificate_start() with
    //   sum_{n>=N} 2 (n ln delta)^{-(1+delta)/2} <= target
    long tail_block(const Rat& target) const;

    // hits against a prefix: block n hits iff omega crosses within block n
    // (only blocks with m_{n+1} <= |omega| are decided)
    PassVerdict passes(const std::vector<int>& omega, long block_horizon) const;

private:
    Rat delta_;
    IReal threshold(long n, mpfr_prec_t prec) const;
    bool threshold_is_zero(long n) const; // m_n <= 2 (lnln clamp)
};

} // namespace cutstack
