#include "cutstack/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "cutstack/construction.hpp"
#include "cutstack/errors.hpp"

namespace cutstack {

namespace {

std::vector<int> bits_of(unsigned long long v, long n) {
    std::vector<int> x(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) x[static_cast<size_t>(j)] = static_cast<int>((v >> (n - 1 - j)) & 1ULL);
    return x;
}

} // namespace

unsigned long long count_codelength_below(const std::function<long(const std::vector<int>&)>& coder,
                                          long n, long threshold_bits, bool parallel) {
    if (n < 0 || n > 30) throw invalid_parameter_error("count_codelength_below: n out of range");
    if (threshold_bits <= 0) return 0;
    const unsigned long long total = 1ULL << n;
    unsigned long long count = 0;
    if (parallel) {
#ifdef CUTSTACK_HAVE_OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
        for (long long v = 0; v < static_cast<long long>(total); ++v) {
            if (coder(bits_of(static_cast<unsigned long long>(v), n)) < threshold_bits) ++count;
        }
    } else {
        for (unsigned long long v = 0; v < total; ++v)
            if (coder(bits_of(v, n)) < threshold_bits) ++count;
    }
    return count;
}

std::vector<unsigned long long> codelength_histogram(
    const std::function<long(const std::vector<int>&)>& coder, long n, bool parallel) {
    if (n < 0 || n > 26) throw invalid_parameter_error("codelength_histogram: n out of range");
    const unsigned long long total = 1ULL << n;
    const long max_bits = 4 * (n + 2);
    std::vector<unsigned long long> hist(static_cast<size_t>(max_bits) + 1, 0);
    if (parallel) {
#ifdef CUTSTACK_HAVE_OPENMP
#pragma omp parallel
        {
            std::vector<unsigned long long> local(hist.size(), 0);
#pragma omp for schedule(static)
            for (long long v = 0; v < static_cast<long long>(total); ++v) {
                long cl = coder(bits_of(static_cast<unsigned long long>(v), n));
                if (cl >= 0 && cl <= max_bits) ++local[static_cast<size_t>(cl)];
            }
#pragma omp critical
            for (size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
        }
#else
        for (unsigned long long v = 0; v < total; ++v) {
            long cl = coder(bits_of(v, n));
            if (cl >= 0 && cl <= max_bits) ++hist[static_cast<size_t>(cl)];
        }
#endif
    } else {
        for (unsigned long long v = 0; v < total; ++v) {
            long cl = coder(bits_of(v, n));
            if (cl >= 0 && cl <= max_bits) ++hist[static_cast<size_t>(cl)];
        }
    }
    return hist;
}

unsigned long long slln_block_count_bruteforce(long n, const Rat& eps, bool parallel) {
    if (n < 1 || n > 30) throw invalid_parameter_error("slln brute force: n out of range");
    // |ones/n - 1/2| >= eps  <=>  ones <= A or ones >= B with integer cutoffs
    long A = -1, B = n + 1;
    for (long o = 0; o <= n; ++o) {
        if ((Rat(o, n) - Rat(1, 2)).abs() >= eps) {
            if (o <= n / 2) A = std::max(A, o);
            if (2 * o >= n) B = std::min(B, o);
        }
    }
    const unsigned long long total = 1ULL << n;
    unsigned long long count = 0;
    if (parallel) {
#ifdef CUTSTACK_HAVE_OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
        for (long long v = 0; v < static_cast<long long>(total); ++v) {
            long o = __builtin_popcountll(static_cast<unsigned long long>(v));
            if (o <= A || o >= B) ++count;
        }
    } else {
        for (unsigned long long v = 0; v < total; ++v) {
            long o = __builtin_popcountll(v);
            if (o <= A || o >= B) ++count;
        }
    }
    return count;
}

std::pair<unsigned long long, unsigned long long> reflection_counts(long m, long a, bool parallel) {
    if (m < 1 || m > 26) throw invalid_parameter_error("reflection: m out of range");
    const unsigned long long total = 1ULL << m;
    unsigned long long cmax = 0, cend = 0;
    auto body = [&](unsigned long long v, unsigned long long& lmax, unsigned long long& lend) {
        long s = 0, smax = 0;
        for (long k = 0; k < m; ++k) {
            s += static_cast<long>((v >> (m - 1 - k)) & 1ULL);
            smax = std::max(smax, s);
        }
        if (smax > a) ++lmax;
        if (s > a) ++lend;
    };
    if (parallel) {
#ifdef CUTSTACK_HAVE_OPENMP
#pragma omp parallel
        {
            unsigned long long lmax = 0, lend = 0;
#pragma omp for schedule(static)
            for (long long v = 0; v < static_cast<long long>(total); ++v)
                body(static_cast<unsigned long long>(v), lmax, lend);
#pragma omp critical
            {
                cmax += lmax;
                cend += lend;
            }
        }
#else
        for (unsigned long long v = 0; v < total; ++v) body(v, cmax, cend);
#endif
    } else {
        for (unsigned long long v = 0; v < total; ++v) body(v, cmax, cend);
    }
    return {cmax, cend};
}

LevelMapReport verify_stage_level_maps(const Gadget& lambda, long R, bool parallel) {
    LevelMapReport rep;
    const size_t k = lambda.num_columns();
    double projected = std::pow(static_cast<double>(k), static_cast<double>(R));
    if (projected > 2e7) {
        rep.ok = false;
        rep.message = "stage has ~" + std::to_string(projected) + " columns; enumeration infeasible";
        return rep;
    }
    const unsigned long long ncols = [&] {
        unsigned long long c = 1;
        for (long t = 0; t < R; ++t) c *= k;
        return c;
    }();

    std::atomic<bool> ok{true};
    std::atomic<unsigned long long> levels{0};
    std::string first_error;

#ifdef CUTSTACK_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
#endif
    for (long long ci = 0; ci < static_cast<long long>(ncols); ++ci) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        // decode slot sequence, most significant digit = slot 1
        std::vector<size_t> slots(static_cast<size_t>(R));
        unsigned long long rem = static_cast<unsigned long long>(ci);
        for (long t = R - 1; t >= 0; --t) {
            slots[static_cast<size_t>(t)] = static_cast<size_t>(rem % k);
            rem /= k;
        }
        ImplicitColumn col = implicit_column(lambda, R, slots);
        unsigned long long local_levels = 0;
        bool good = true;
        std::string err;
        bool have_prev = false;
        for (size_t u = 0; u < slots.size() && good; ++u) {
            const Column& src = lambda.columns[slots[u]];
            const auto& [start, width] = col.windows[u];
            Rat wcol = src.width();
            Rat slice_w = width * wcol;
            if (slice_w != col.width) {
                good = false;
                err = "slice width mismatch in column " + std::to_string(ci);
                break;
            }
            Rat prev_lo;
            for (long l = 0; l < src.height(); ++l) {
                const Interval& lvl = src.levels[static_cast<size_t>(l)];
                Rat lo = lvl.lo + start * wcol;
                Rat hi = lo + slice_w;
                if (l > 0) {
                    // successor of the previous level: translation by the
                    // source-column level shift, exact
                    Rat expected = prev_lo + (lvl.lo - src.levels[static_cast<size_t>(l - 1)].lo);
                    if (expected != lo) {
                        good = false;
                        err = "translation mismatch in column " + std::to_string(ci);
                        break;
                    }
                    ++local_levels;
                }
                prev_lo = lo;
                (void)hi;
            }
            if (good && have_prev) ++local_levels; // the glue joint below this slot
            have_prev = true;
        }
        levels.fetch_add(local_levels, std::memory_order_relaxed);
        if (!good) {
            bool expected = true;
            if (ok.compare_exchange_strong(expected, false)) {
#ifdef CUTSTACK_HAVE_OPENMP
#pragma omp critical
#endif
                first_error = err;
            }
        }
    }

    rep.ok = ok.load();
    rep.columns_checked = ncols;
    rep.levels_checked = levels.load();
    rep.message = rep.ok ? "" : first_error;
    if (!rep.ok) return rep;

    // window tiling: for each lambda column, the slice windows across all
    // stage columns and slots partition [0,1) exactly
    for (size_t i = 0; i < k && rep.ok; ++i) {
        std::vector<std::pair<Rat, Rat>> windows; // (start, width)
        std::vector<size_t> slots(static_cast<size_t>(R));
        for (unsigned long long ci = 0; ci < ncols; ++ci) {
            unsigned long long rem = ci;
            for (long t = R - 1; t >= 0; --t) {
                slots[static_cast<size_t>(t)] = static_cast<size_t>(rem % k);
                rem /= k;
            }
            ImplicitColumn col = implicit_column(lambda, R, slots);
            for (size_t u = 0; u < slots.size(); ++u)
                if (slots[u] == i) windows.push_back(col.windows[u]);
        }
        std::sort(windows.begin(), windows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Rat cursor = 0;
        for (const auto& [s, w] : windows) {
            if (s != cursor) {
                rep.ok = false;
                rep.message = "window gap/overlap at " + s.str() + " (expected " + cursor.str() +
                              ") in lambda column " + std::to_string(i);
                break;
            }
            cursor += w;
        }
        if (rep.ok && cursor != Rat(1)) {
            rep.ok = false;
            rep.message = "windows of lambda column " + std::to_string(i) + " cover " +
                          cursor.str() + " != 1";
        }
    }
    return rep;
}

} // namespace cutstack
