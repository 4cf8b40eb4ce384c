#include "cutstack/schedule.hpp"

#include "cutstack/errors.hpp"

namespace cutstack {

HeightSchedule derive_height_schedule(const SigmaFunction& sigma, const Rat& r, long s_max,
                                      long seed_h, long search_bound) {
    if (!(r > Rat(0) && r < Rat(1, 4)))
        throw invalid_parameter_error("r must satisfy 0 < r < 1/4, got " + r.str());
    if (!r.is_dyadic()) throw invalid_parameter_error("r must be dyadic, got " + r.str());
    // ceil(-log2 r), exact when r is a power of two; the ceiling only
    // strengthens the gap inequality for other dyadic r.
    long den_log = static_cast<long>(mpz_scan1(r.den().get_mpz_t(), 0));
    long num_bits = static_cast<long>(mpz_sizeinbase(r.num().get_mpz_t(), 2));
    long neg_log_r = den_log - (num_bits - 1);
    if (seed_h < 1) throw invalid_parameter_error("schedule seed must be >= 1");

    HeightSchedule sched;
    sched.r = r;
    sched.h.push_back(seed_h);
    for (long i = 0; i <= s_max; ++i) {
        long gap = i + neg_log_r + 11;
        long prev = sched.h.back();
        long sig_prev = sigma(prev);
        auto ok = [&](long cand) { return sigma(cand) - sig_prev > gap; };
        // sigma is nondecreasing: exponential probe, then binary refine to the
        // smallest admissible height
        long hi = prev + 1;
        while (!ok(hi)) {
            if (hi > search_bound)
                throw schedule_infeasible_error(
                    "sigma cannot exceed gap " + std::to_string(gap) + " above h=" +
                    std::to_string(prev) + " within bound " + std::to_string(search_bound));
            hi = (hi < search_bound / 2) ? hi * 2 : search_bound + 1;
        }
        long lo = prev; // known not admissible (gap > 0 and sigma(prev)-sig_prev = 0)
        while (hi - lo > 1) {
            long mid = lo + (hi - lo) / 2;
            if (ok(mid))
                hi = mid;
            else
                lo = mid;
        }
        sched.h.push_back(hi);
    }
    return sched;
}

} // namespace cutstack
