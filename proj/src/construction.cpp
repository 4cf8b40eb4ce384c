#include "cutstack/construction.hpp"

#include <algorithm>
#include <cmath>

#include "cutstack/errors.hpp"
#include "cutstack/gadget_ops.hpp"
#include "cutstack/rng.hpp"

namespace cutstack {

namespace {

// Frozen shuffle constant for Delta_0's stacking order. Part of the
// construction definition, deliberately independent of any user seed.
constexpr uint64_t kDeltaStackSeed = 0x5EEDD3117A5CADE5ULL;

Column column_from_parts(const Rat& lo, const Rat& part_width, const std::vector<long>& order) {
    Column c;
    c.levels.reserve(order.size());
    for (long p : order) {
        Rat a = lo + Rat(p) * part_width;
        c.levels.emplace_back(a, a + part_width);
    }
    return c;
}

} // namespace

std::pair<Gadget, Gadget> init_gadgets(const Rat& r, long h0, bool scrambled_delta) {
    if (!(r > Rat(0) && r < Rat(1, 4)))
        throw invalid_parameter_error("init_gadgets requires 0 < r < 1/4, got " + r.str());
    if (!r.is_dyadic())
        throw invalid_parameter_error("init_gadgets requires dyadic r, got " + r.str());
    if (h0 < 1) throw invalid_parameter_error("init_gadgets requires h0 >= 1");

    const long H = 2 * h0;
    const Rat half(1, 2);

    // Delta_0 over [1/2 - r, 1/2 + r), 2h0 parts of width r/h0
    Rat dpart = r / Rat(h0);
    std::vector<long> order(static_cast<size_t>(H));
    for (long i = 0; i < H; ++i) order[static_cast<size_t>(i)] = i;
    if (scrambled_delta) {
        SplitMix64 rng(kDeltaStackSeed);
        shuffle(order, rng);
    }
    Gadget delta0;
    delta0.columns.push_back(column_from_parts(half - r, dpart, order));

    // Pi_0 over [0, 1/2 - r) u [1/2 + r, 1): 2h0 parts of width (1-2r)/(2h0);
    // the left piece holds the lower parts, the right piece the upper ones.
    Rat ppart = (Rat(1) - Rat(2) * r) / Rat(H);
    // (1/2 - r) / ppart = h0 exactly, so parts never straddle the gap
    Column pi_col;
    pi_col.levels.reserve(static_cast<size_t>(H));
    for (long i = 0; i < H; ++i) {
        Rat a = Rat(i) * ppart;
        if (a >= half - r) a += Rat(2) * r; // skip over [1/2-r, 1/2+r)
        pi_col.levels.emplace_back(a, a + ppart);
    }
    Gadget pi0;
    pi0.columns.push_back(std::move(pi_col));

    delta0.check_invariants();
    pi0.check_invariants();
    return {delta0, pi0};
}

namespace {

bool exact_defect_affordable(const std::vector<ColumnClass>& lambda, long M) {
    if (lambda.size() > 64) return false;
    bool single_height = true;
    for (const auto& c : lambda)
        if (c.height != lambda.front().height) { single_height = false; break; }
    if (single_height) return M <= 2048;
    return M <= 64;
}

// Certified (or exact) decision of defect(lambda, lambda^{*(M)}) < eps.
bool defect_less_than(const std::vector<ColumnClass>& lambda, long M, const Rat& eps) {
    if (exact_defect_affordable(lambda, M)) return mfold_defect_exact(lambda, M) < eps;
    for (mpfr_prec_t p = 192; p <= 1024; p *= 2) {
        IReal d = mfold_defect_enclosure(lambda, M, p);
        if (d.definitely_less(eps)) return true;
        if (d.definitely_ge(eps)) return false;
    }
    // enclosure straddles eps at max precision (triangle-bound slack, most
    // likely): treat as not satisfying, which only drives the search higher
    return false;
}

std::pair<Rat, bool> defect_value(const std::vector<ColumnClass>& lambda, long M) {
    if (exact_defect_affordable(lambda, M)) return {mfold_defect_exact(lambda, M), true};
    IReal d = mfold_defect_enclosure(lambda, M, 256);
    return {d.upper_rat(), false};
}

} // namespace

long find_R(const std::vector<ColumnClass>& lambda, long min_height, const Rat& epsilon,
            long cap) {
    if (!(epsilon > Rat(0))) throw invalid_parameter_error("find_R requires epsilon > 0");
    long hmin = classes_min_height(lambda);
    auto pred = [&](long M) {
        if (M * hmin < min_height) return false;
        return defect_less_than(lambda, M, epsilon);
    };
    long M = 1;
    while (!pred(M)) {
        if (M > cap / 2)
            throw construction_budget_error("find_R exceeded cap " + std::to_string(cap));
        M *= 2;
    }
    if (M == 1) return 1;
    long lo = M / 2, hi = M;
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

long find_R(const Gadget& lambda, long min_height, const Rat& epsilon, long cap) {
    return find_R(classes_of(lambda), min_height, epsilon, cap);
}

ConstructionState init_construction(const Rat& r, const HeightSchedule& schedule,
                                    bool scrambled_delta) {
    ConstructionState st;
    st.r = r;
    st.schedule = schedule;
    st.delta_scrambled = scrambled_delta;
    auto [delta0, pi0] = init_gadgets(r, schedule.at(0), scrambled_delta);
    st.pi = std::move(pi0);
    st.pi_materialized = true;
    st.pi_classes = classes_of(st.pi);
    st.delta = delta0.columns[0];
    st.s = 0;
    return st;
}

void construction_step(ConstructionState& st) {
    const long s_next = st.s + 1;
    if (s_next > st.schedule.stages())
        throw invalid_parameter_error("schedule does not reach stage " + std::to_string(s_next));
    const long h_s = st.schedule.at(s_next);

    // split Delta_{s-1} into Delta' (left) and Delta'' (right)
    Gadget delta_g;
    delta_g.columns.push_back(st.delta);
    auto halves = cut_gadget(delta_g, {Rat(1, 2), Rat(1, 2)});
    Column delta_prime = halves[0].columns[0];
    Column delta_pp = halves[1].columns[0];

    // Lambda = Pi_{s-1} u Delta'' (Pi columns first, Delta'' last)
    std::vector<ColumnClass> lambda_classes = st.pi_classes;
    lambda_classes.push_back({delta_pp.width(), delta_pp.height(), 1});

    Rat pi_part_width = classes_width(st.pi_classes);
    Rat delta_part_width = delta_pp.width();
    Rat pi_support_prev = classes_support(st.pi_classes);

    long R = find_R(lambda_classes, 2 * h_s, Rat(1, s_next), st.find_R_cap);
    auto [dfct, dfct_exact] = defect_value(lambda_classes, R);

    // Delta_s = (Delta')^{*(R'_s)} with R'_s minimal for the height bound
    long dh = delta_prime.height();
    long Rp = (2 * h_s + dh - 1) / dh;
    if (Rp < 1) Rp = 1;
    Gadget dprime_g;
    dprime_g.columns.push_back(delta_prime);
    Gadget delta_next_g = m_fold_independent(dprime_g, Rp);
    Column delta_next = delta_next_g.columns[0];
    delta_next.provenance.clear();

    // Pi_s classes (always); Pi_s gadget when within budget
    auto pi_next_classes = mfold_classes(lambda_classes, R);
    LadderLevel rung;
    rung.s = s_next;
    rung.R = R;
    rung.delta_col = delta_pp;
    rung.pi_part_width = pi_part_width;
    rung.delta_part_width = delta_part_width;
    rung.lambda_materialized = false;

    bool materialize = false;
    Gadget lambda_g;
    if (st.pi_materialized) {
        lambda_g = st.pi;
        lambda_g.columns.push_back(delta_pp);
        rung.lambda = lambda_g;
        rung.lambda_materialized = true;
        // projected interval count of Pi_s: (#cols)^R columns of height R*avg
        double cols = std::pow(static_cast<double>(lambda_g.num_columns()), static_cast<double>(R));
        double intervals = cols * static_cast<double>(R) *
                           static_cast<double>(lambda_g.max_height());
        materialize = intervals <= static_cast<double>(st.materialize_budget);
    }

    StageRecord rec;
    rec.s = s_next;
    rec.R = R;
    rec.R_delta = Rp;
    rec.defect = dfct;
    rec.defect_is_exact = dfct_exact;
    rec.gamma = delta_part_width * Rat(delta_pp.height()) / pi_support_prev;
    rec.delta_height = delta_next.height();

    if (materialize) {
        Gadget pi_next = m_fold_independent(lambda_g, R);
        // dual route: provenance-based defect must agree exactly with the
        // closed form whenever both are available
        if (dfct_exact) {
            Rat d2 = well_distribution_defect(lambda_g, pi_next);
            if (d2 != dfct)
                throw cannot_evaluate_error("defect routes disagree: " + d2.str() + " vs " +
                                            dfct.str());
        }
        st.pi = std::move(pi_next);
        st.pi_materialized = true;
    } else {
        st.pi = Gadget{};
        st.pi_materialized = false;
    }
    if (!pi_next_classes)
        throw construction_budget_error("stage " + std::to_string(s_next) +
                                        ": class summary exceeds limit");
    st.pi_classes = std::move(*pi_next_classes);
    st.delta = std::move(delta_next);
    st.s = s_next;

    rec.pi_support = classes_support(st.pi_classes);
    rec.delta_support = st.delta.support_measure();
    rec.pi_width = classes_width(st.pi_classes);
    rec.delta_width = st.delta.width();
    rec.pi_min_height = classes_min_height(st.pi_classes);
    rec.pi_columns = classes_count(st.pi_classes);
    st.records.push_back(rec);
    st.defect_history.push_back(dfct);
    st.ladder.push_back(std::move(rung));
}

ImplicitColumn implicit_column(const Gadget& lambda, long R, const std::vector<size_t>& slots) {
    if (static_cast<long>(slots.size()) != R)
        throw invalid_parameter_error("slot sequence length must equal R");
    const size_t k = lambda.num_columns();
    std::vector<Rat> dist = lambda.distribution();
    std::vector<Rat> cum(k + 1);
    cum[0] = 0;
    for (size_t j = 0; j < k; ++j) cum[j + 1] = cum[j] + dist[j];

    ImplicitColumn out;
    out.slots = slots;
    Rat w = lambda.width();
    Rat prod = 1;
    for (size_t u = 0; u < slots.size(); ++u) {
        if (slots[u] >= k) throw invalid_parameter_error("slot index out of range");
        prod *= dist[slots[u]];
    }
    out.width = (w / Rat(R)) * prod;

    const Rat invR = Rat(1, R);
    for (size_t u = 0; u < slots.size(); ++u) {
        // prefix: mixed-radix cumulative over slots[0..u-1]
        Rat p_pre = 0, w_pre = 1;
        for (size_t v = 0; v < u; ++v) {
            p_pre += cum[slots[v]] * w_pre;
            w_pre *= dist[slots[v]];
        }
        // tail over slots[u+1..]
        Rat p_tail = 0, w_tail = 1;
        for (size_t v = u + 1; v < slots.size(); ++v) {
            p_tail += cum[slots[v]] * w_tail;
            w_tail *= dist[slots[v]];
        }
        Rat start = Rat(static_cast<long>(u)) * invR + invR * (p_pre + w_pre * p_tail);
        Rat width = invR * w_pre * w_tail;
        out.windows.emplace_back(start, width);
    }
    return out;
}

} // namespace cutstack
