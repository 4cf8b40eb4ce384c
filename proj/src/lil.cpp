#include "cutstack/lil.hpp"

#include <algorithm>

#include "cutstack/errors.hpp"

namespace cutstack {

LilFamily::LilFamily(Rat delta) : delta_(std::move(delta)) {
    if (!(delta_ > Rat(1))) throw invalid_parameter_error("lil family requires delta > 1");
}

BigInt LilFamily::block_boundary(long n) const {
    if (n < 1) throw invalid_parameter_error("block index must be >= 1");
    Rat p = pow(delta_, static_cast<unsigned long>(n));
    return p.ceil();
}

bool LilFamily::threshold_is_zero(long n) const { return block_boundary(n) <= 2; }

IReal LilFamily::threshold(long n, mpfr_prec_t prec) const {
    // delta * sqrt((1/2) m_n * max(lnln m_n, 0))
    BigInt m = block_boundary(n);
    IReal m_iv = IReal::from_rat(Rat(m, BigInt(1)), prec);
    IReal lnln = m_iv.ln().ln();
    IReal half_m = m_iv * IReal::from_rat(Rat(1, 2), prec);
    return IReal::from_rat(delta_, prec) * (half_m * lnln).sqrt();
}

IReal LilFamily::threshold_enclosure(long n, mpfr_prec_t prec) const { return threshold(n, prec); }

bool LilFamily::crosses(long n, const Rat& s_minus_half_k) const {
    if (threshold_is_zero(n)) return s_minus_half_k > Rat(0);
    if (s_minus_half_k <= Rat(0)) return false; // threshold is positive for m_n >= 3
    return decide_with_precision([&](mpfr_prec_t p) -> int {
        IReal th = threshold(n, p);
        if (th.definitely_less(s_minus_half_k)) return 1;
        if (th.definitely_ge(s_minus_half_k)) return -1;
        return 0;
    });
}

namespace {
// per-block threshold comparison cache: s > theta decided against one
// precomputed enclosure, falling back to the refining path on a straddle
class ThresholdGate {
public:
    ThresholdGate(const LilFamily& fam, long n)
        : fam_(fam), n_(n), zero_(fam.block_boundary(n) <= 2), th_(512) {
        if (!zero_) th_ = fam_.threshold_enclosure(n_, 512);
    }
    bool crosses(const Rat& s) const {
        if (zero_) return s > Rat(0);
        if (s <= Rat(0)) return false;
        if (th_.definitely_less(s)) return true;
        if (th_.definitely_ge(s)) return false;
        return fam_.crosses(n_, s);
    }

private:
    const LilFamily& fam_;
    long n_;
    bool zero_;
    IReal th_;
};
} // namespace

std::vector<std::vector<int>> LilFamily::enumerate_block(long n, long max_len_budget) const {
    BigInt m_n_big = block_boundary(n), m_n1_big = block_boundary(n + 1);
    if (m_n1_big > max_len_budget)
        throw invalid_parameter_error("block " + std::to_string(n) + " exceeds length budget");
    long m_n = static_cast<long>(mpz_get_si(m_n_big.get_mpz_t()));
    long m_n1 = static_cast<long>(mpz_get_si(m_n1_big.get_mpz_t()));
    ThresholdGate gate(*this, n);

    // DFS over the binary tree to depth m_{n+1}, children 0 before 1. Emit
    // minimal crossing prefixes with length in [m_n, m_{n+1}], prune their
    // subtrees, and prune branches whose best continuation cannot cross.
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    struct Frame {
        long s2; // 2*S_k - k at depth k = |cur|
        int next_bit;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        long k = static_cast<long>(cur.size());
        bool prune = false;
        if (f.next_bit == 0) { // first visit to this node
            if (k >= m_n && gate.crosses(Rat(f.s2, 2))) {
                out.push_back(cur);
                prune = true;
            } else if (k == m_n1) {
                prune = true;
            } else {
                // max future S_j - j/2 over j in (k, m_n1] is reached by all
                // ones at j = m_n1: s2/2 + (m_n1 - k)/2
                Rat best = Rat(f.s2, 2) + Rat(m_n1 - k, 2);
                if (!gate.crosses(best)) prune = true;
            }
        }
        if (prune || f.next_bit > 1) {
            stack.pop_back();
            if (!cur.empty() && !stack.empty()) cur.pop_back();
            continue;
        }
        int b = f.next_bit++;
        cur.push_back(b);
        stack.push_back({f.s2 + (b ? 1 : -1), 0});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Rat LilFamily::block_measure(long n, long max_len_budget) const {
    Rat total = 0;
    for (const auto& x : enumerate_block(n, max_len_budget))
        total += Rat::pow2(-static_cast<long>(x.size()));
    return total;
}

IReal LilFamily::block_bound(long n, mpfr_prec_t prec) const {
    // 2 exp(-delta^2 (m_n / m_{n+1}) lnln m_n), lnln clamped at 0
    BigInt m = block_boundary(n), m1 = block_boundary(n + 1);
    IReal m_iv = IReal::from_rat(Rat(m, BigInt(1)), prec);
    IReal lnln = m_iv.ln().ln();
    if (threshold_is_zero(n)) return IReal::from_long(2, prec);
    IReal expo = IReal::from_rat(delta_ * delta_ * Rat(m, m1), prec) * lnln;
    return IReal::from_long(2, prec) * expo.neg().exp();
}

long LilFamily::certificate_start() const {
    // first n with m_n >= max(3, delta_bar / (delta (delta - delta_bar))),
    // so that delta^2 m_n / m_{n+1} >= delta_bar = (1+delta)/2 and lnln m_n > 0
    Rat dbar = (Rat(1) + delta_) / Rat(2);
    Rat m_star = dbar / (delta_ * (delta_ - dbar));
    BigInt need = m_star.ceil();
    if (need < 3) need = 3;
    long n = 1;
    while (block_boundary(n) < need) ++n;
    return n;
}

long LilFamily::tail_block(const Rat& target) const {
    if (!(target > Rat(0))) throw invalid_parameter_error("target must be positive");
    long n0 = certificate_start();
    // sum_{n>=N} 2 (n ln delta)^{-dbar} <= 2 (ln delta)^{-dbar} (N^{-dbar} + N^{1-dbar}/(dbar-1))
    Rat dbar = (Rat(1) + delta_) / Rat(2);
    for (long N = n0;; ++N) {
        bool ok = decide_with_precision([&](mpfr_prec_t p) -> int {
            IReal ln_d = IReal::from_rat(delta_, p).ln();
            IReal db = IReal::from_rat(dbar, p);
            IReal n_iv = IReal::from_long(N, p);
            // x^{-dbar} = exp(-dbar ln x)
            auto pow_neg = [&](const IReal& x, const IReal& e) { return (e * x.ln()).neg().exp(); };
            IReal head = pow_neg(n_iv, db);
            IReal integral = pow_neg(n_iv, db - IReal::from_long(1, p)) /
                             (db - IReal::from_long(1, p));
            IReal bound = IReal::from_long(2, p) * pow_neg(ln_d, db) * (head + integral);
            if (bound.definitely_le(target)) return 1;
            if (bound.definitely_greater(target)) return -1;
            return 0;
        });
        if (ok) return N;
        if (N > n0 + 100000)
            throw cannot_evaluate_error("lil tail_block search exceeded bound");
    }
}

PassVerdict LilFamily::passes(const std::vector<int>& omega, long block_horizon) const {
    PassVerdict v;
    v.horizon = block_horizon;
    long len = static_cast<long>(omega.size());
    // prefix sums of s2 = 2 S_k - k
    std::vector<long> s2(static_cast<size_t>(len) + 1, 0);
    for (long k = 1; k <= len; ++k)
        s2[static_cast<size_t>(k)] = s2[static_cast<size_t>(k - 1)] + (omega[static_cast<size_t>(k - 1)] ? 1 : -1);
    for (long n = 1; n <= block_horizon; ++n) {
        BigInt m_n_big = block_boundary(n), m_n1_big = block_boundary(n + 1);
        if (m_n1_big > len) break; // undecidable blocks beyond the prefix
        long m_n = static_cast<long>(mpz_get_si(m_n_big.get_mpz_t()));
        long m_n1 = static_cast<long>(mpz_get_si(m_n1_big.get_mpz_t()));
        ThresholdGate gate(*this, n);
        bool hit = false;
        for (long k = m_n; k <= m_n1 && !hit; ++k)
            hit = gate.crosses(Rat(s2[static_cast<size_t>(k)], 2));
        if (hit) {
            v.hit_blocks.push_back(n);
            v.last_hit_block = n;
        }
    }
    return v;
}

} // namespace cutstack
