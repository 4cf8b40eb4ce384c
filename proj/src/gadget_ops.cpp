#include "cutstack/gadget_ops.hpp"

#include <numeric>

namespace cutstack {

std::vector<Gadget> cut_gadget(const Gadget& g, const std::vector<Rat>& probs) {
    if (probs.empty()) throw invalid_distribution_error("empty probability vector");
    Rat sum = 0;
    for (const auto& p : probs) {
        if (p.sign() <= 0) throw invalid_distribution_error("nonpositive cut probability " + p.str());
        sum += p;
    }
    if (sum != Rat(1))
        throw invalid_distribution_error("cut probabilities sum to " + sum.str() + ", not 1");

    std::vector<Gadget> out(probs.size());
    // cumulative offsets
    std::vector<Rat> cum(probs.size() + 1);
    cum[0] = 0;
    for (size_t m = 0; m < probs.size(); ++m) cum[m + 1] = cum[m] + probs[m];

    for (size_t m = 0; m < probs.size(); ++m) {
        Gadget& copy = out[m];
        copy.columns.reserve(g.columns.size());
        for (const auto& col : g.columns) {
            Column sub;
            sub.levels.reserve(col.levels.size());
            for (const auto& iv : col.levels) {
                Rat w = iv.width();
                sub.levels.emplace_back(iv.lo + cum[m] * w, iv.lo + cum[m + 1] * w);
            }
            sub.provenance = col.provenance;
            copy.columns.push_back(std::move(sub));
        }
    }
    return out;
}

Column stack_columns(const Column& e1, const Column& e2) {
    if (e1.width() != e2.width())
        throw incompatible_columns_error("width mismatch: " + e1.width().str() + " vs " +
                                         e2.width().str());
    for (const auto& a : e1.levels)
        for (const auto& b : e2.levels)
            if (a.overlaps(b))
                throw incompatible_columns_error("overlapping supports: " + a.str() + " and " +
                                                 b.str());
    Column out = e1;
    out.levels.insert(out.levels.end(), e2.levels.begin(), e2.levels.end());
    out.provenance.insert(out.provenance.end(), e2.provenance.begin(), e2.provenance.end());
    return out;
}

Gadget stack_gadgets(const Gadget& u, const Gadget& l) {
    if (u.width() != l.width())
        throw incompatible_gadgets_error("gadget widths differ: " + u.width().str() + " vs " +
                                         l.width().str());
    std::vector<Gadget> l_copies = cut_gadget(l, u.distribution());
    std::vector<Rat> l_dist = l.distribution();

    Gadget out;
    out.columns.reserve(u.num_columns() * l.num_columns());
    for (size_t i = 0; i < u.columns.size(); ++i) {
        Gadget base;
        base.columns.push_back(u.columns[i]);
        std::vector<Gadget> subcols = cut_gadget(base, l_dist);
        const Gadget& lam_i = l_copies[i];
        for (size_t j = 0; j < lam_i.columns.size(); ++j)
            out.columns.push_back(stack_columns(subcols[j].columns[0], lam_i.columns[j]));
    }
    return out;
}

Gadget m_fold_independent(const Gadget& g, long m) {
    if (m < 1) throw invalid_parameter_error("m_fold_independent requires m >= 1");
    Gadget tagged = g.with_self_provenance();
    if (m == 1) return tagged;
    std::vector<Rat> equal(static_cast<size_t>(m), Rat(1, m));
    std::vector<Gadget> copies = cut_gadget(tagged, equal);
    Gadget acc = std::move(copies[0]);
    for (long t = 1; t < m; ++t) acc = stack_gadgets(acc, copies[static_cast<size_t>(t)]);
    return acc;
}

Rat well_distribution_defect(const Gadget& lambda, const Gadget& upsilon) {
    const size_t k = lambda.num_columns();
    // validate provenance against lambda
    for (const auto& e : upsilon.columns) {
        if (!e.has_provenance())
            throw cannot_evaluate_error("upsilon column lacks provenance");
        for (const auto& [src, h] : e.provenance) {
            if (src < 0 || static_cast<size_t>(src) >= k)
                throw cannot_evaluate_error("provenance references column " + std::to_string(src) +
                                            " outside lambda");
            if (h != lambda.columns[static_cast<size_t>(src)].height())
                throw cannot_evaluate_error("provenance segment height " + std::to_string(h) +
                                            " does not match lambda column height");
        }
    }

    std::vector<Rat> lam_measure(k);
    for (size_t d = 0; d < k; ++d) lam_measure[d] = lambda.columns[d].support_measure();

    Rat defect = 0;
    std::vector<long> count(k);
    for (const auto& e : upsilon.columns) {
        std::fill(count.begin(), count.end(), 0L);
        long height_sum = 0;
        for (const auto& [src, h] : e.provenance) {
            count[static_cast<size_t>(src)]++;
            height_sum += h;
        }
        Rat we = e.width();
        Rat e_measure = we * Rat(height_sum);
        for (size_t d = 0; d < k; ++d) {
            Rat inter = we * Rat(lambda.columns[d].height()) * Rat(count[d]);
            defect += (inter - e_measure * lam_measure[d]).abs();
        }
    }
    return defect;
}

} // namespace cutstack
