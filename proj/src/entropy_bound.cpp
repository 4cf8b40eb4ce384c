#include "cutstack/entropy_bound.hpp"

#include "cutstack/errors.hpp"

namespace cutstack {

EntropyBoundResult entropy_upper_bound(const Rat& r, long n, mpfr_prec_t prec) {
    if (!(r > Rat(0) && r < Rat(1, 4))) throw invalid_parameter_error("need 0 < r < 1/4");
    if (n < 2) throw invalid_parameter_error("need n >= 2");

    BigInt kmax = (Rat(2) * r * Rat(n)).ceil();
    unsigned long k = mpz_get_ui(kmax.get_mpz_t());

    BigInt sum = 0;
    BigInt binom = 1; // C(n, 0)
    for (unsigned long i = 0;; ++i) {
        sum += binom;
        if (i >= k) break;
        // C(n, i+1) = C(n, i) * (n - i) / (i + 1)
        binom *= BigInt(n - static_cast<long>(i));
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), i + 1);
    }

    EntropyBoundResult out;
    IReal sum_iv = IReal::from_rat(Rat(sum, BigInt(1)), prec);
    IReal n_iv = IReal::from_long(n, prec);
    out.lhs = sum_iv.log2() / n_iv + IReal::from_long(2, prec) * n_iv.log2() / n_iv;

    // rhs = -3 r log2 r
    bool pow2 = false;
    long e = 0;
    try {
        e = r.exact_log2();
        pow2 = true;
    } catch (const invalid_parameter_error&) {
        pow2 = false;
    }
    if (pow2) {
        out.rhs_exact = Rat(-3) * r * Rat(e);
        out.rhs_is_exact = true;
        out.rhs = IReal::from_rat(out.rhs_exact, prec);
    } else {
        IReal r_iv = IReal::from_rat(r, prec);
        out.rhs = IReal::from_long(-3, prec) * r_iv * r_iv.log2();
    }
    out.holds = out.lhs.definitely_less(out.rhs);
    return out;
}

} // namespace cutstack
