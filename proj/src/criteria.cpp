#include "cutstack/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "cutstack/adversary.hpp"
#include "cutstack/csvio.hpp"
#include "cutstack/deficiency.hpp"
#include "cutstack/dynamics.hpp"
#include "cutstack/entropy_bound.hpp"
#include "cutstack/errors.hpp"
#include "cutstack/gadget_ops.hpp"
#include "cutstack/kernels.hpp"
#include "cutstack/kraft.hpp"
#include "cutstack/lil.hpp"
#include "cutstack/lz78.hpp"
#include "cutstack/rng.hpp"
#include "cutstack/slln.hpp"

namespace cutstack {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// The fixed two-column well-distribution test gadget: heights 3 and 1,
// measures 7/8 and 1/8, full support.
Gadget two_column_test_gadget() {
    Gadget g;
    Column a;
    a.levels.emplace_back(Rat(0), Rat(7, 24));
    a.levels.emplace_back(Rat(7, 24), Rat(14, 24));
    a.levels.emplace_back(Rat(14, 24), Rat(21, 24));
    Column b;
    b.levels.emplace_back(Rat(21, 24), Rat(1));
    g.columns = {a, b};
    g.check_invariants();
    return g;
}

struct Fixtures {
    std::optional<ConstructionState> r8;
    std::optional<ConstructionState> r64;
    std::optional<AdversaryTrace> trace64;
    ExperimentConfig cfg64;

    Fixtures() {
        cfg64.r = Rat(1, 64);
        cfg64.sigma_spec = "identity";
        cfg64.stages = 5;
        cfg64.horizon = 1L << 15;
        cfg64.seed = 1;
        cfg64.phase_plan = {1024, 3072, 12288, 4096, 12288};
    }

    ConstructionState& get_r8() {
        if (!r8) {
            SigmaFunction sigma = SigmaFunction::identity();
            HeightSchedule sched = derive_height_schedule(sigma, Rat(1, 8), 3);
            r8 = init_construction(Rat(1, 8), sched);
            for (int s = 1; s <= 3; ++s) construction_step(*r8);
        }
        return *r8;
    }

    ConstructionState& get_r64() {
        if (!r64) r64 = build_construction(cfg64);
        return *r64;
    }

    AdversaryTrace& get_trace64() {
        if (!trace64) trace64 = build_adversary(cfg64, get_r64());
        return *trace64;
    }
};

// column levels map setwise onto successors: explicit image comparison
bool check_materialized_levels(const Gadget& g, std::string& err) {
    for (size_t ci = 0; ci < g.columns.size(); ++ci) {
        const Column& c = g.columns[ci];
        for (long j = 0; j + 1 < c.height(); ++j) {
            const Interval& cur = c.levels[static_cast<size_t>(j)];
            const Interval& nxt = c.levels[static_cast<size_t>(j + 1)];
            Interval image(nxt.lo, nxt.lo + cur.width());
            if (!(image == nxt)) {
                err = "column " + std::to_string(ci) + " level " + std::to_string(j) +
                      ": image " + image.str() + " != " + nxt.str();
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 1
CriterionResult criterion_gadget_soundness() {
    CriterionResult res{1, "gadget algebra soundness (1000 seeded op sequences)", false, "", 0};
    const int kSequences = 1000;
    const int kDepth = 8;
    std::atomic<int> failures{0};
    std::string first_fail;

#ifdef CUTSTACK_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < kSequences; ++i) {
        if (failures.load(std::memory_order_relaxed) > 0) continue;
        SplitMix64 rng(0xACCE17A11ULL ^ (0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(i + 1)));
        Gadget g;
        Column unit;
        unit.levels.emplace_back(Rat(0), Rat(1));
        g.columns.push_back(unit);
        Rat support = 1;
        bool ok = true;
        for (int d = 0; d < kDepth && ok; ++d) {
            int op = static_cast<int>(rng.below(4));
            try {
                switch (op) {
                    case 0: { // cut into 2 pieces, random split
                        long a = 1 + static_cast<long>(rng.below(7));
                        long b = 1 + static_cast<long>(rng.below(7));
                        Rat p(a, a + b);
                        auto parts = cut_gadget(g, {p, Rat(1) - p});
                        g = gadget_union(parts[0], parts[1]);
                        break;
                    }
                    case 1: { // cut into 3 pieces
                        long a = 1 + static_cast<long>(rng.below(5));
                        long b = 1 + static_cast<long>(rng.below(5));
                        long c = 1 + static_cast<long>(rng.below(5));
                        Rat s(a + b + c, 1);
                        auto parts = cut_gadget(g, {Rat(a) / s, Rat(b) / s, Rat(c) / s});
                        g = gadget_union(gadget_union(parts[0], parts[1]), parts[2]);
                        break;
                    }
                    case 2: { // stack the two halves
                        if (g.num_columns() * g.num_columns() > 1500) break;
                        auto halves = cut_gadget(g, {Rat(1, 2), Rat(1, 2)});
                        g = stack_gadgets(halves[0], halves[1]);
                        break;
                    }
                    case 3: { // m-fold
                        long m = 2 + static_cast<long>(rng.below(2));
                        double proj = std::pow(static_cast<double>(g.num_columns()),
                                               static_cast<double>(m));
                        if (proj > 1500) break;
                        g = m_fold_independent(g, m);
                        break;
                    }
                }
                g.check_invariants();
                if (g.support_measure() != support) {
                    ok = false;
                }
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) {
            failures.fetch_add(1);
#ifdef CUTSTACK_HAVE_OPENMP
#pragma omp critical
#endif
            if (first_fail.empty()) first_fail = "sequence " + std::to_string(i);
        }
    }
    res.pass = failures.load() == 0;
    res.detail = res.pass ? "1000 sequences, support and disjointness exact"
                          : ("failure at " + first_fail);
    return res;
}

// ---------------------------------------------------------------- criterion 2
CriterionResult criterion_measure_preservation(Fixtures& fx) {
    CriterionResult res{2, "measure preservation, every level, stages <= 3 (r=1/8)", false, "", 0};
    ConstructionState& st = fx.get_r8();
    std::ostringstream detail;
    bool pass = true;
    std::string err;

    // stage 0 gadgets and every Delta_s are materialized single columns
    auto [d0, p0] = init_gadgets(Rat(1, 8), st.schedule.at(0), st.delta_scrambled);
    if (!check_materialized_levels(d0, err) || !check_materialized_levels(p0, err)) {
        pass = false;
        detail << "stage 0: " << err << "; ";
    } else {
        detail << "stage 0 exhaustive pass; ";
    }

    for (long s = 1; s <= 3 && pass; ++s) {
        const LadderLevel& lv = st.ladder[static_cast<size_t>(s - 1)];
        Gadget dg;
        dg.columns.push_back(st.ladder[static_cast<size_t>(s - 1)].delta_col);
        if (!check_materialized_levels(dg, err)) {
            pass = false;
            detail << "Delta'' stage " << s << ": " << err << "; ";
            break;
        }
        if (!lv.lambda_materialized) {
            pass = false;
            detail << "stage " << s << ": lambda not materialized; ";
            break;
        }
        LevelMapReport rep = verify_stage_level_maps(lv.lambda, lv.R, true);
        if (rep.ok) {
            detail << "stage " << s << " exhaustive pass (" << rep.columns_checked
                   << " columns); ";
        } else {
            pass = false;
            detail << "stage " << s << " FAILED: " << rep.message
                   << " [defect < 1/s forces R_" << s << " = " << lv.R
                   << "; enumeration is physically impossible at this stage; "
                      "stages below were verified exhaustively]";
        }
    }
    res.pass = pass;
    res.detail = detail.str();
    return res;
}

// ---------------------------------------------------------------- criterion 3
CriterionResult criterion_well_distribution() {
    CriterionResult res{3, "well-distribution on the two-column test gadget", false, "", 0};
    Gadget g = two_column_test_gadget();
    auto cls = classes_of(g);
    Rat d1 = mfold_defect_exact(cls, 1);
    Rat d64 = mfold_defect_exact(cls, 64);
    long found = -1;
    for (long M = 1; M <= 64; M *= 2) {
        if (mfold_defect_exact(cls, M) < Rat(1, 10)) {
            found = M;
            break;
        }
    }
    // cross-route check at small M: provenance defect equals the closed form
    bool routes_agree = true;
    for (long M : {1L, 2L, 4L}) {
        Gadget up = m_fold_independent(g, M);
        if (well_distribution_defect(g, up) != mfold_defect_exact(cls, M)) routes_agree = false;
    }
    res.pass = (found > 0) && (d64 < d1) && routes_agree;
    res.detail = "defect(1)=" + d1.str() + ", defect(64)=" + fmt_double(d64.to_double()) +
                 ", first probed M with defect<1/10: " + std::to_string(found) +
                 (routes_agree ? ", provenance route agrees" : ", ROUTE MISMATCH");
    return res;
}

// ---------------------------------------------------------------- criterion 4
CriterionResult criterion_construction_invariants(Fixtures& fx) {
    CriterionResult res{4, "construction invariants, stages <= 3 (r=1/8)", false, "", 0};
    ConstructionState& st = fx.get_r8();
    const Rat r = st.r;
    std::ostringstream detail;
    bool pass = true;
    for (long s = 1; s <= 3; ++s) {
        const StageRecord& rec = st.records[static_cast<size_t>(s - 1)];
        Rat want_delta = Rat::pow2(1 - s) * r;
        Rat want_pi = Rat(1) - want_delta;
        if (rec.delta_support != want_delta || rec.pi_support != want_pi) {
            pass = false;
            detail << "stage " << s << ": support identity failed; ";
        }
        if (rec.pi_min_height < 2 * st.schedule.at(s) || rec.delta_height < 2 * st.schedule.at(s)) {
            pass = false;
            detail << "stage " << s << ": height bound failed; ";
        }
        if (!(rec.defect < Rat(1, s))) {
            pass = false;
            detail << "stage " << s << ": defect " << rec.defect.to_double() << " >= 1/" << s
                   << "; ";
        }
        // gamma identity and the displayed lower bound
        Rat want_gamma = (Rat::pow2(1 - s) * r) / (Rat(1) - Rat::pow2(2 - s) * r);
        long gap = st.schedule.at(s - 1) - st.schedule.at(s - 2); // sigma = identity here
        if (rec.gamma != want_gamma || !(rec.gamma > Rat::pow2(-(gap + 12)))) {
            pass = false;
            detail << "stage " << s << ": gamma bound failed; ";
        }
    }
    if (pass)
        detail << "support/height/defect/gamma identities exact for s=1..3 (stage-3 defect via "
                  "certified upper bound "
               << fmt_double(st.records[2].defect.to_double()) << ", R=[" << st.records[0].R << ","
               << st.records[1].R << "," << st.records[2].R << "])";
    res.pass = pass;
    res.detail = detail.str();
    return res;
}

// ---------------------------------------------------------------- criterion 5
CriterionResult criterion_hoeffding() {
    CriterionResult res{5, "Hoeffding exactness and rate certificates (slln)", false, "", 0};
    SllnFamily fam({Rat(1, 4), Rat(1, 2)});
    bool pass = true;
    std::ostringstream detail;
    for (size_t k = 0; k < 2 && pass; ++k) {
        for (long n = 1; n <= 20 && pass; ++n) {
            unsigned long long brute = slln_block_count_bruteforce(n, fam.eps(k), true);
            BigInt combinatorial = fam.block_count(k, n);
            if (BigInt(static_cast<unsigned long>(brute)) != combinatorial) {
                pass = false;
                detail << "count mismatch at eps=" << fam.eps(k).str() << " n=" << n << "; ";
            }
            if (!fam.block_measure_within_bound(k, n)) {
                pass = false;
                detail << "bound violated at eps=" << fam.eps(k).str() << " n=" << n << "; ";
            }
        }
        for (long e = 1; e <= 10 && pass; ++e) {
            if (!fam.verify_certificate(k, Rat::pow2(-e))) {
                pass = false;
                detail << "certificate failed at eps=" << fam.eps(k).str() << " delta=2^-" << e
                       << "; ";
            }
        }
    }
    if (pass)
        detail << "brute force equals combinatorial counts (n<=20), bounds certified, "
                  "certificates verified for delta=2^-1..2^-10";
    res.pass = pass;
    res.detail = detail.str();
    return res;
}

// ---------------------------------------------------------------- criterion 6
CriterionResult criterion_lil() {
    CriterionResult res{6, "LIL machinery (reflection, prefix-free covers, block measures)",
                        false, "", 0};
    bool pass = true;
    std::ostringstream detail;
    for (long m = 1; m <= 16 && pass; ++m) {
        for (long a = m / 2 + 1; a <= m; ++a) {
            auto [cmax, cend] = reflection_counts(m, a, true);
            if (cmax > 2 * cend) {
                pass = false;
                detail << "reflection failed at m=" << m << " a=" << a << "; ";
                break;
            }
        }
    }
    for (const Rat& dl : {Rat(3, 2), Rat(2)}) {
        if (!pass) break;
        LilFamily fam(dl);
        double max_c = 0;
        int blocks = 0;
        for (long n = 1;; ++n) {
            if (fam.block_boundary(n + 1) > 22) break;
            auto block = fam.enumerate_block(n, 22);
            if (!is_prefix_free(block)) {
                pass = false;
                detail << "block " << n << " (delta=" << dl.str() << ") not prefix-free; ";
                break;
            }
            Rat meas = fam.block_measure(n, 22);
            // record the empirical constant c_n = L * n^delta (upper)
            IReal nd = IReal::from_long(n, 192).ln() * IReal::from_rat(dl, 192);
            IReal c_n = IReal::from_rat(meas, 192) * nd.exp();
            max_c = std::max(max_c, c_n.mid_double());
            ++blocks;
        }
        detail << "delta=" << dl.str() << ": " << blocks
               << " enumerable blocks prefix-free, max c~=" << fmt_double(max_c) << "; ";
    }
    if (pass) detail << "reflection exact for all m<=16";
    res.pass = pass;
    res.detail = detail.str();
    return res;
}

// ---------------------------------------------------------------- criterion 7
CriterionResult criterion_kraft() {
    CriterionResult res{7, "Kraft pipeline (nu, prefix-free code, rho)", false, "", 0};
    bool pass = true;
    std::ostringstream detail;

    SllnFamily fam({Rat(1, 2), Rat(1, 4)});
    for (size_t k = 0; k < 2 && pass; ++k) {
        long n_max = (k == 0) ? 24 : 14;
        std::vector<std::string> strings;
        std::vector<long> lengths;
        std::vector<long> block_start_index(static_cast<size_t>(n_max) + 2, 0);
        for (long n = 1; n <= n_max; ++n) {
            block_start_index[static_cast<size_t>(n)] = static_cast<long>(strings.size());
            for (const auto& x : fam.enumerate_block(k, n)) {
                strings.push_back(bits_to_string(x));
                lengths.push_back(n);
            }
        }
        block_start_index[static_cast<size_t>(n_max) + 1] = static_cast<long>(strings.size());

        EnumeratedFamily ef;
        ef.lengths = lengths;
        ef.tail_index = [&fam, k, n_max, block_start_index](const Rat& delta) -> size_t {
            long N = fam.tail_block(k, delta);
            if (N > n_max) return static_cast<size_t>(block_start_index[n_max + 1]);
            return static_cast<size_t>(block_start_index[static_cast<size_t>(N)]);
        };
        NuFunction nu = derive_nu(ef);
        KraftCode code = kraft_code(strings, nu);
        if (!code.prefix_free()) {
            pass = false;
            detail << "code not prefix-free (eps=" << fam.eps(k).str() << "); ";
        }
        if (!(code.kraft_sum() <= Rat(1))) {
            pass = false;
            detail << "Kraft sum " << code.kraft_sum().str() << " > 1; ";
        }
        for (const auto& [x, w] : code.pairs()) {
            if (code.decode(w) != x) {
                pass = false;
                detail << "decode(encode) != id; ";
                break;
            }
            long l = static_cast<long>(x.size());
            if (static_cast<long>(w.size()) >
                std::max<long>(1, l - nu.at(l) + code.normalizer())) {
                pass = false;
                detail << "codeword longer than l - nu(l) + c; ";
                break;
            }
        }
        RhoFunction rho = derive_rho(nu);
        for (long n = 1; n <= 4096 && pass; ++n) {
            if (rho.rho(n) * rho.witness(n) > nu.at(n)) {
                pass = false;
                detail << "rho*w > nu at n=" << n << "; ";
            }
        }
        for (long n = 4096; n <= 1000000 && pass; n *= 2) {
            if (rho.rho(n) * rho.witness(n) > nu.at(n)) {
                pass = false;
                detail << "rho*w > nu at n=" << n << "; ";
            }
        }
        if (pass)
            detail << "eps=" << fam.eps(k).str() << ": " << strings.size()
                   << " strings, c=" << code.normalizer() << ", Kraft sum "
                   << fmt_double(code.kraft_sum().to_double()) << "; ";
    }
    res.pass = pass;
    res.detail = detail.str();
    return res;
}

// ---------------------------------------------------------------- criterion 8
CriterionResult criterion_entropy() {
    CriterionResult res{8, "entropy bound at r=1/32, n=10^4", false, "", 0};
    EntropyBoundResult eb = entropy_upper_bound(Rat(1, 32), 10000);
    res.pass = eb.holds && eb.rhs_is_exact && eb.rhs_exact == Rat(15, 32);
    res.detail = "lhs in " + eb.lhs.str(6) + ", rhs = " + eb.rhs_exact.str() + " = 0.46875" +
                 (res.pass ? " (certified <)" : " (FAILED)");
    return res;
}

// ---------------------------------------------------------------- criterion 9
CriterionResult criterion_incompressibility() {
    CriterionResult res{9, "incompressibility counting for LZ78, n <= 16", false, "", 0};
    auto coder = lz78_coder();
    bool pass = true;
    std::ostringstream detail;
    for (long n = 1; n <= 16 && pass; ++n) {
        auto hist = codelength_histogram(coder, n, true);
        // prefix counts: #{cl < t}
        std::vector<unsigned long long> below(hist.size() + 1, 0);
        for (size_t t = 1; t <= hist.size(); ++t) below[t] = below[t - 1] + hist[t - 1];
        for (long m = 0; m <= n; ++m) {
            long t = n - m;
            unsigned long long cnt = (t <= 0) ? 0 : below[static_cast<size_t>(t)];
            BigInt bound = 1;
            if (t > 0) mpz_mul_2exp(bound.get_mpz_t(), BigInt(1).get_mpz_t(), static_cast<mp_bitcnt_t>(t));
            if (!(BigInt(static_cast<unsigned long>(cnt)) < bound)) {
                pass = false;
                detail << "bound failed at n=" << n << " m=" << m << "; ";
                break;
            }
        }
    }
    if (pass) detail << "count{cl < n-m} < 2^(n-m) for all n<=16, m<=n";
    res.pass = pass;
    res.detail = detail.str();
    return res;
}

// --------------------------------------------------------------- criterion 10
CriterionResult criterion_bounded_increase() {
    CriterionResult res{10, "bounded-increase selection on 1000 seeded instances", false, "", 0};
    bool pass = true;
    std::ostringstream detail;
    int checked = 0;
    for (int inst = 0; inst < 1000 && pass; ++inst) {
        SplitMix64 rng(0xB0DE5E1EC7ULL + 2654435761ULL * inst);
        // biased or uniform dyadic product measure
        long pn = 1 + static_cast<long>(rng.below(3)); // P(1) = pn/4
        CylinderMeasure P = [pn](const std::string& x) {
            Rat p(1);
            for (char c : x) p *= (c == '1') ? Rat(pn, 4) : Rat(4 - pn, 4);
            return p;
        };
        // random semimeasure Q built top-down: Q(x0)+Q(x1) <= Q(x); M = Q/P
        std::map<std::string, Rat> q{{"", Rat(1)}};
        std::map<std::string, Rat> mtab;
        const long depth = 1 + static_cast<long>(rng.below(8));
        std::vector<std::string> frontier{""};
        mtab[""] = Rat(1);
        for (long d = 0; d < depth; ++d) {
            std::vector<std::string> next;
            for (const auto& x : frontier) {
                long a = static_cast<long>(rng.below(5));
                long b = static_cast<long>(rng.below(static_cast<uint64_t>(5 - a)));
                q[x + "0"] = q[x] * Rat(a, 4);
                q[x + "1"] = q[x] * Rat(b, 4);
                next.push_back(x + "0");
                next.push_back(x + "1");
            }
            frontier = std::move(next);
        }
        for (const auto& [x, qx] : q) {
            Rat px = P(x);
            if (!px.is_zero()) mtab[x] = qx / px;
        }
        Supermartingale M(mtab, Rat(0));
        // sanity: M is a valid supermartingale on the probed tree
        if (!supermartingale_check(M, P, depth).empty()) {
            pass = false;
            detail << "constructed M not a supermartingale (instance " << inst << "); ";
            break;
        }
        // random extension set of the root
        std::vector<std::string> A;
        for (const auto& [x, qx] : q) {
            if (x.empty()) continue;
            if (static_cast<long>(x.size()) <= depth && rng.below(4) == 0) A.push_back(x);
        }
        if (A.empty()) continue;
        Rat mu(1 + static_cast<long>(rng.below(6)), 8); // mu in {1/8..6/8}
        SelectionResult sel;
        try {
            sel = bounded_increase_select(M, P, "", A, mu);
        } catch (const invalid_selection_error&) {
            continue; // zero-measure A under a degenerate Q; not a valid instance
        }
        ++checked;
        if (!(sel.kept_measure > mu * sel.a_measure)) {
            pass = false;
            detail << "measure bound failed (instance " << inst << "); ";
            break;
        }
        // multiplicative form of the log bound, exact
        for (const auto& y : sel.kept) {
            for (size_t j = 0; j <= y.size() && pass; ++j) {
                if (M.value(y.substr(0, j)) * sel.threshold_den > sel.threshold_num) {
                    pass = false;
                    detail << "log bound failed (instance " << inst << "); ";
                }
            }
        }
    }
    if (pass) detail << std::to_string(checked) + " nontrivial instances, both postconditions exact";
    res.pass = pass;
    res.detail = detail.str();
    return res;
}

// --------------------------------------------------------------- criterion 11
CriterionResult criterion_oscillation(Fixtures& fx) {
    CriterionResult res{11, "oscillation analog (frequencies, LZ78 gap, deficiency)", false, "", 0};
    AdversaryTrace& tr = fx.get_trace64();
    OscillationReport osc = compression_oscillation(tr);

    const Rat low_target = Rat(2, 64) + Rat(1, 20);
    const Rat high_target = Rat(1, 16) - Rat(1, 100);
    long low_at = -1, high_at = -1;
    for (const auto& cp : tr.checkpoints) {
        if (cp.n > (1L << 14)) break;
        if (low_at < 0 && cp.frequency <= low_target) low_at = cp.n;
        if (low_at > 0 && cp.n > low_at && cp.frequency >= high_target) {
            high_at = cp.n;
            break;
        }
    }
    bool gap_ok = osc.gap >= Rat(1, 5);
    bool defic_ok = tr.sigma_violation_at < 0;
    res.pass = (low_at > 0) && (high_at > 0) && gap_ok && defic_ok;
    res.detail = "low freq cp at n=" + std::to_string(low_at) + ", high at n=" +
                 std::to_string(high_at) + ", gap=" + fmt_double(osc.gap.to_double()) +
                 " (max_even=" + fmt_double(osc.max_even_ratio.to_double()) + "@" +
                 std::to_string(osc.max_even_at) + ", min_odd=" +
                 fmt_double(osc.min_odd_ratio.to_double()) + "@" + std::to_string(osc.min_odd_at) +
                 "), deficiency bound " + (defic_ok ? "held" : "VIOLATED") + ", R=[" +
                 [&] {
                     std::string s;
                     for (size_t i = 0; i < tr.stage_R.size(); ++i)
                         s += (i ? "," : "") + std::to_string(tr.stage_R[i]);
                     return s;
                 }() +
                 "]";
    return res;
}

void write_artifacts(const ExperimentConfig& cfg, const std::string& dir,
                     const std::vector<std::string>& only);

// --------------------------------------------------------------- criterion 12
CriterionResult criterion_determinism() {
    CriterionResult res{12, "determinism: identical configs give byte-identical outputs", false,
                        "", 0};
    ExperimentConfig cfg;
    cfg.r = Rat(1, 64);
    cfg.stages = 4;
    cfg.horizon = 2048;
    cfg.seed = 7;
    cfg.phase_plan = {256, 512, 640, 640};
    cfg.checkpoint_every = 256;

    namespace fsys = std::filesystem;
    fsys::path base = fsys::temp_directory_path() / "cutstack_det";
    fsys::remove_all(base);
    std::string d1 = (base / "a").string(), d2 = (base / "b").string();
    write_artifacts(cfg, d1, {});
    write_artifacts(cfg, d2, {});

    bool same = true;
    std::string diff_file;
    for (const auto& entry : fsys::directory_iterator(d1)) {
        std::ifstream f1(entry.path(), std::ios::binary);
        std::ifstream f2(fsys::path(d2) / entry.path().filename(), std::ios::binary);
        std::stringstream s1, s2;
        s1 << f1.rdbuf();
        s2 << f2.rdbuf();
        if (s1.str() != s2.str()) {
            same = false;
            diff_file = entry.path().filename().string();
            break;
        }
    }
    res.pass = same;
    res.detail = same ? "two runs byte-identical across all artifacts"
                      : ("artifact differs: " + diff_file);
    return res;
}

// -------------------------------------------------------------------- run_all
std::string rat_dec(const Rat& r, int digits = 10) {
    IReal v = IReal::from_rat(r, 128);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v.lo());
    std::string out = s;
    mpfr_free_str(s);
    return out;
}

void write_artifacts(const ExperimentConfig& cfg, const std::string& dir,
                     const std::vector<std::string>& only) {
    namespace fsys = std::filesystem;
    fsys::create_directories(dir);
    auto wanted = [&](const std::string& what) {
        return only.empty() || std::find(only.begin(), only.end(), what) != only.end();
    };

    ConstructionState st = build_construction(cfg);

    if (wanted("build")) {
        CsvWriter csv(dir + "/build.csv");
        csv.row({"stage", "num_columns", "min_height", "width", "support_pi", "support_delta",
                 "defect", "R_s"});
        for (const auto& rec : st.records) {
            csv.row({std::to_string(rec.s), rec.pi_columns.get_str(),
                     std::to_string(rec.pi_min_height), rec.pi_width.str(), rec.pi_support.str(),
                     rec.delta_support.str(), rec.defect.str(), std::to_string(rec.R)});
        }
    }

    if (wanted("simulate")) {
        // iterate T on the stage-1 gadget from the base of its first column
        SigmaFunction sigma = cfg.sigma();
        HeightSchedule sched = derive_height_schedule(sigma, cfg.r, 1);
        ConstructionState st1 = init_construction(cfg.r, sched, cfg.delta_scrambled);
        construction_step(st1);
        PartitionSpec part(cfg.r);
        const Gadget& g = st1.pi;
        Rat x = g.columns[0].base().lo + g.columns[0].width() / Rat(7);
        CsvWriter csv(dir + "/simulate.csv");
        csv.row({"step", "point", "symbol", "running_average"});
        long ones = 0;
        long steps = std::min<long>(200, g.columns[0].height());
        for (long i = 0; i < steps; ++i) {
            int sym = part.chi(x);
            ones += sym;
            csv.row({std::to_string(i), x.str(), std::to_string(sym),
                     Rat(ones, i + 1).str()});
            auto nxt = apply_T(g, x);
            if (!nxt) break;
            x = *nxt;
        }
    }

    if (wanted("tests")) {
        SllnFamily fam({Rat(1, 4), Rat(1, 2)});
        std::vector<int> omega;
        for (long i = 0; i < 64; ++i) omega.push_back(static_cast<int>(i % 2));
        CsvWriter csv(dir + "/tests_slln.csv");
        csv.row({"k", "n", "U_size", "exact_measure", "bound", "hit_indices"});
        for (size_t k = 0; k < 2; ++k) {
            PassVerdict pv = fam.passes(omega, k, 16);
            std::string hits;
            for (size_t i = 0; i < pv.hit_blocks.size(); ++i)
                hits += (i ? "|" : "") + std::to_string(pv.hit_blocks[i]);
            for (long n = 1; n <= 16; ++n) {
                csv.row({std::to_string(k), std::to_string(n), fam.block_count(k, n).get_str(),
                         fam.block_measure(k, n).str(),
                         rat_dec(fam.block_bound(k, n).upper_rat()), hits});
            }
        }
        LilFamily lf(Rat(3, 2));
        CsvWriter csv2(dir + "/tests_lil.csv");
        csv2.row({"k", "n", "U_size", "exact_measure", "bound", "hit_indices"});
        PassVerdict pv = lf.passes(omega, 6);
        std::string hits;
        for (size_t i = 0; i < pv.hit_blocks.size(); ++i)
            hits += (i ? "|" : "") + std::to_string(pv.hit_blocks[i]);
        for (long n = 1; lf.block_boundary(n + 1) <= 22; ++n) {
            auto block = lf.enumerate_block(n, 22);
            csv2.row({"1", std::to_string(n), std::to_string(block.size()),
                      lf.block_measure(n, 22).str(), rat_dec(lf.block_bound(n).upper_rat()),
                      hits});
        }
    }

    if (wanted("compress")) {
        std::vector<int> input;
        for (long i = 0; i < 4096; ++i) input.push_back(static_cast<int>(i % 2));
        auto running = lz78_running_codelength(input);
        CsvWriter csv(dir + "/compress.csv");
        csv.row({"prefix_length", "codelength", "ratio", "proxy_deficiency"});
        for (long n = 256; n <= 4096; n += 256) {
            long cl = running[static_cast<size_t>(n - 1)];
            csv.row({std::to_string(n), std::to_string(cl), Rat(cl, n).str(),
                     std::to_string(n - cl)});
        }
    }

    if (wanted("adversary")) {
        AdversaryTrace tr = build_adversary(cfg, st);
        CsvWriter csv(dir + "/adversary.csv");
        csv.row({"n", "phase", "frequency", "lz78_bits", "ratio", "neg_log2_width",
                 "deficiency_upper"});
        for (const auto& cp : tr.checkpoints) {
            csv.row({std::to_string(cp.n), cp.even_phase ? "even" : "odd", cp.frequency.str(),
                     std::to_string(cp.lz78_bits), Rat(cp.lz78_bits, cp.n).str(),
                     rat_dec(cp.neg_log2_width_hi), rat_dec(cp.deficiency_hi)});
        }
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only, bool verbose) {
    Fixtures fx;
    auto want = [&](int id) {
        return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
    };
    std::vector<CriterionResult> out;
    auto push = [&](CriterionResult r, Clock::time_point t0) {
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (verbose) {
            std::fprintf(stderr, "criterion %2d [%s] %.2fs %s\n", r.id,
                         r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        }
        out.push_back(std::move(r));
    };
    if (want(1)) { auto t = Clock::now(); push(criterion_gadget_soundness(), t); }
    if (want(2)) { auto t = Clock::now(); push(criterion_measure_preservation(fx), t); }
    if (want(3)) { auto t = Clock::now(); push(criterion_well_distribution(), t); }
    if (want(4)) { auto t = Clock::now(); push(criterion_construction_invariants(fx), t); }
    if (want(5)) { auto t = Clock::now(); push(criterion_hoeffding(), t); }
    if (want(6)) { auto t = Clock::now(); push(criterion_lil(), t); }
    if (want(7)) { auto t = Clock::now(); push(criterion_kraft(), t); }
    if (want(8)) { auto t = Clock::now(); push(criterion_entropy(), t); }
    if (want(9)) { auto t = Clock::now(); push(criterion_incompressibility(), t); }
    if (want(10)) { auto t = Clock::now(); push(criterion_bounded_increase(), t); }
    if (want(11)) { auto t = Clock::now(); push(criterion_oscillation(fx), t); }
    if (want(12)) { auto t = Clock::now(); push(criterion_determinism(), t); }
    return out;
}

bool run_all(const ExperimentConfig& cfg, const std::vector<std::string>& only_artifacts) {
    write_artifacts(cfg, cfg.out_dir, only_artifacts);
    std::vector<CriterionResult> results = run_acceptance({}, true);
    nlohmann::json j;
    j["schema_version"] = 1;
    bool all = true;
    for (const auto& r : results) {
        j["criteria"].push_back({{"id", r.id},
                                 {"name", r.name},
                                 {"pass", r.pass},
                                 {"detail", r.detail}});
        all = all && r.pass;
    }
    j["all_pass"] = all;
    std::ofstream out(cfg.out_dir + "/summary.json");
    out << j.dump(2) << "\n";
    return all;
}

} // namespace cutstack
