#include "cutstack/slln.hpp"

#include "cutstack/errors.hpp"

namespace cutstack {

SllnFamily::SllnFamily(std::vector<Rat> epsilons) : eps_(std::move(epsilons)) {
    if (eps_.empty()) throw invalid_parameter_error("empty epsilon sequence");
    for (const auto& e : eps_)
        if (!(e > Rat(0))) throw invalid_parameter_error("epsilon must be positive");
}

namespace {
// |i/n - 1/2| >= eps as an exact rational comparison
bool bad_count(long i, long n, const Rat& eps) {
    Rat dev = (Rat(i, n) - Rat(1, 2)).abs();
    return dev >= eps;
}
} // namespace

bool SllnFamily::in_block(size_t k, const std::vector<int>& x) const {
    if (x.empty()) return false;
    return bad_count(ones_count(x), static_cast<long>(x.size()), eps(k));
}

BigInt SllnFamily::block_count(size_t k, long n) const {
    BigInt total = 0;
    BigInt binom = 1;
    for (long i = 0; i <= n; ++i) {
        if (bad_count(i, n, eps(k))) total += binom;
        if (i < n) {
            binom *= BigInt(n - i);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i + 1));
        }
    }
    return total;
}

Rat SllnFamily::block_measure(size_t k, long n) const {
    return Rat(block_count(k, n), BigInt(1)) * Rat::pow2(-n);
}

std::vector<std::vector<int>> SllnFamily::enumerate_block(size_t k, long n, size_t budget) const {
    if (n > 62) throw invalid_parameter_error("block too large to enumerate");
    std::vector<std::vector<int>> out;
    const Rat& e = eps(k);
    for (unsigned long long v = 0; v < (1ULL << n); ++v) {
        long ones = static_cast<long>(__builtin_popcountll(v));
        if (!bad_count(ones, n, e)) continue;
        std::vector<int> x(static_cast<size_t>(n));
        for (long j = 0; j < n; ++j) x[static_cast<size_t>(j)] = (v >> (n - 1 - j)) & 1ULL;
        out.push_back(std::move(x));
        if (out.size() > budget) throw invalid_parameter_error("block enumeration budget exceeded");
    }
    return out;
}

BigInt SllnFamily::rank_in_block(size_t k, const std::vector<int>& x) const {
    // count members of U_{k,n} lexicographically below x by walking its bits:
    // at position t with x_t = 1, all strings with prefix x^{t} 0 and any
    // suffix contribute C(n-t-1, j) for each admissible total count.
    const long n = static_cast<long>(x.size());
    const Rat& e = eps(k);
    if (!in_block(k, x)) throw invalid_parameter_error("string is not in the block");
    BigInt rank = 0;
    long prefix_ones = 0;
    for (long t = 0; t < n; ++t) {
        if (x[static_cast<size_t>(t)] == 1) {
            long rem = n - t - 1;
            // suffixes after x^{t}0: ones total = prefix_ones + j
            BigInt binom = 1; // C(rem, 0)
            for (long j = 0; j <= rem; ++j) {
                if (bad_count(prefix_ones + j, n, e)) rank += binom;
                if (j < rem) {
                    binom *= BigInt(rem - j);
                    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                                    static_cast<unsigned long>(j + 1));
                }
            }
            prefix_ones += 1;
        }
    }
    return rank;
}

IReal SllnFamily::block_bound(size_t k, long n, mpfr_prec_t prec) const {
    // 2 exp(-2 n eps^2)
    IReal e2 = IReal::from_rat(Rat(-2) * Rat(n) * eps(k) * eps(k), prec);
    return IReal::from_long(2, prec) * e2.exp();
}

bool SllnFamily::block_measure_within_bound(size_t k, long n) const {
    Rat lhs = block_measure(k, n);
    return certified_le(lhs, [&](mpfr_prec_t p) { return block_bound(k, n, p); });
}

long SllnFamily::tail_block(size_t k, const Rat& delta) const {
    if (!(delta > Rat(0))) throw invalid_parameter_error("delta must be positive");
    // smallest N with 2 e^{-2 N eps^2} / (1 - e^{-2 eps^2}) <= delta
    const Rat eps2 = Rat(2) * eps(k) * eps(k);
    for (mpfr_prec_t p = 192; p <= 4096; p *= 2) {
        IReal q = IReal::from_rat(-eps2, p).exp();              // e^{-2 eps^2} < 1
        IReal denom = IReal::from_long(1, p) - q;               // 1 - q > 0
        IReal target = IReal::from_rat(delta, p) * denom / IReal::from_long(2, p);
        // need e^{-2 N eps^2} <= target  i.e.  N >= -ln(target) / (2 eps^2)
        IReal nreal = target.ln().neg() / IReal::from_rat(eps2, p);
        Rat up = nreal.upper_rat();
        BigInt nceil = up.ceil();
        if (nceil < 1) nceil = 1;
        long N = static_cast<long>(mpz_get_si(nceil.get_mpz_t()));
        // certify the tail at N
        IReal tail = IReal::from_long(2, p) *
                     IReal::from_rat(-eps2 * Rat(N), p).exp() / denom;
        if (tail.definitely_le(delta)) return N;
        if (tail.definitely_greater(delta)) {
            // ceiling was too aggressive only if the enclosure straddled; try N+1
            IReal tail2 = IReal::from_long(2, p) *
                          IReal::from_rat(-eps2 * Rat(N + 1), p).exp() / denom;
            if (tail2.definitely_le(delta)) return N + 1;
        }
    }
    throw cannot_evaluate_error("tail_block undecided at max precision");
}

bool SllnFamily::verify_certificate(size_t k, const Rat& delta, long exact_blocks) const {
    long N = tail_block(k, delta);
    // exact partial sum over blocks N .. N+exact_blocks-1
    Rat partial = 0;
    for (long n = N; n < N + exact_blocks; ++n) partial += block_measure(k, n);
    // analytic tail from N+exact_blocks, certified upper, plus exact partial <= delta
    const Rat eps2 = Rat(2) * eps(k) * eps(k);
    long M = N + exact_blocks;
    return certified_le(partial, [&](mpfr_prec_t p) {
        IReal q = IReal::from_rat(-eps2, p).exp();
        IReal tail = IReal::from_long(2, p) * IReal::from_rat(-eps2 * Rat(M), p).exp() /
                     (IReal::from_long(1, p) - q);
        return IReal::from_rat(delta, p) - tail;
    });
}

PassVerdict SllnFamily::passes(const std::vector<int>& omega, size_t k, long horizon) const {
    PassVerdict v;
    v.horizon = std::min<long>(horizon, static_cast<long>(omega.size()));
    const Rat& e = eps(k);
    long ones = 0;
    for (long n = 1; n <= v.horizon; ++n) {
        ones += omega[static_cast<size_t>(n - 1)];
        if (bad_count(ones, n, e)) {
            v.hit_blocks.push_back(n);
            v.last_hit_block = n;
        }
    }
    return v;
}

} // namespace cutstack
