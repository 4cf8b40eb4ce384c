#include "cutstack/deficiency.hpp"

#include "cutstack/errors.hpp"
#include "cutstack/kernels.hpp"
#include "cutstack/solovay.hpp"

namespace cutstack {

Codelength lz78_coder() {
    return [](const std::vector<int>& bits) { return lz78_codelength(bits); };
}

DeficiencyRecord proxy_deficiency(const std::vector<int>& x, const CylinderMeasure& p,
                                  const Codelength& coder) {
    DeficiencyRecord rec;
    rec.x = bits_to_string(x);
    Rat px = p(rec.x);
    if (px.is_zero()) throw undefined_deficiency_error("P(x) = 0 for x = " + rec.x);
    rec.codelength = coder(x);
    if (px.is_dyadic() && px.num() == BigInt(1)) {
        // P = 2^-e exactly: -log2 P = e
        long e = -px.exact_log2();
        rec.value = Rat(e) - Rat(rec.codelength);
        rec.lo = rec.hi = rec.value;
        rec.exact = true;
        return rec;
    }
    IReal neg_log = IReal::from_rat(px, 256).log2().neg();
    IReal v = neg_log - IReal::from_long(rec.codelength, 256);
    rec.lo = v.lower_rat();
    rec.hi = v.upper_rat();
    rec.exact = false;
    return rec;
}

IncompressibilityCount incompressibility_count(const Codelength& coder, long n, long m,
                                               long budget_n) {
    if (n > budget_n)
        throw invalid_parameter_error("incompressibility enumeration limited to n <= " +
                                      std::to_string(budget_n));
    IncompressibilityCount out;
    if (m >= n) {
        out.count = 0;
        out.bound = 1;
        out.within_bound = true;
        // still verify by enumeration below when n is small enough; the bound
        // count < 1 means no string at all may have codelength < n-m <= 0
    }
    long threshold = n - m; // count strings with codelength < threshold
    unsigned long long total = count_codelength_below(coder, n, threshold, true);
    out.count = BigInt(static_cast<unsigned long>(total));
    out.bound = 1;
    if (threshold > 0) {
        mpz_mul_2exp(out.bound.get_mpz_t(), BigInt(1).get_mpz_t(),
                     static_cast<mp_bitcnt_t>(threshold));
    }
    out.within_bound = out.count < out.bound;
    return out;
}

ExtensionPenaltyReport extension_penalty_check(
    const Codelength& coder,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& corpus) {
    ExtensionPenaltyReport rep;
    bool first = true;
    for (const auto& [b, x] : corpus) {
        ++rep.pairs;
        Rat c_emp;
        if (b.empty()) {
            c_emp = Rat(0);
        } else {
            std::vector<int> bx = b;
            bx.insert(bx.end(), x.begin(), x.end());
            long clx = coder(x), clbx = coder(bx);
            // 2 log2 l(b) as an upper enclosure; c_emp upper = clx - clbx - 2 log2 l(b) lower
            IReal lg = IReal::from_long(static_cast<long>(b.size()), 192).log2();
            IReal c = IReal::from_long(clx - clbx, 192) - IReal::from_long(2, 192) * lg;
            c_emp = c.upper_rat();
        }
        if (first || c_emp > rep.max_c_emp) rep.max_c_emp = c_emp;
        first = false;
    }
    return rep;
}

} // namespace cutstack
