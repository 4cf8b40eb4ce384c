#include "cutstack/defect.hpp"

#include <algorithm>
#include <map>

#include "cutstack/errors.hpp"

namespace cutstack {

std::vector<ColumnClass> classes_of(const Gadget& g) {
    std::map<std::pair<Rat, long>, BigInt> m;
    for (const auto& c : g.columns) m[{c.width(), c.height()}] += 1;
    std::vector<ColumnClass> out;
    out.reserve(m.size());
    for (const auto& [key, mult] : m) out.push_back({key.first, key.second, mult});
    return out;
}

Rat classes_width(const std::vector<ColumnClass>& cls) {
    Rat w = 0;
    for (const auto& c : cls) w += c.width * Rat(c.mult, 1);
    return w;
}

Rat classes_support(const std::vector<ColumnClass>& cls) {
    Rat s = 0;
    for (const auto& c : cls) s += c.width * Rat(c.height) * Rat(c.mult, 1);
    return s;
}

long classes_min_height(const std::vector<ColumnClass>& cls) {
    long h = 0;
    for (const auto& c : cls) h = (h == 0) ? c.height : std::min(h, c.height);
    return h;
}

BigInt classes_count(const std::vector<ColumnClass>& cls) {
    BigInt n = 0;
    for (const auto& c : cls) n += c.mult;
    return n;
}

std::optional<std::vector<ColumnClass>> mfold_classes(const std::vector<ColumnClass>& lambda,
                                                      long M, size_t limit) {
    Rat w = classes_width(lambda);
    std::map<std::pair<Rat, long>, BigInt> acc;
    acc[{Rat(1), 0}] = 1;
    for (long t = 0; t < M; ++t) {
        std::map<std::pair<Rat, long>, BigInt> next;
        for (const auto& [key, cnt] : acc) {
            for (const auto& cl : lambda) {
                Rat p = cl.width / w;
                next[{key.first * p, key.second + cl.height}] += cnt * cl.mult;
            }
        }
        if (next.size() > limit) return std::nullopt;
        acc = std::move(next);
    }
    std::vector<ColumnClass> out;
    out.reserve(acc.size());
    Rat unit = w / Rat(M);
    for (const auto& [key, cnt] : acc) out.push_back({unit * key.first, key.second, cnt});
    return out;
}

namespace {

// E|X - a| for X ~ Bin(M, p), exact:  (EX - a) + 2 * sum_{c<=floor(a)} (a-c) P(c)
Rat binom_eabs_exact(long M, const Rat& p, const Rat& a) {
    if (p == Rat(1)) return (Rat(M) - a).abs();
    if (p.is_zero()) return a;
    Rat q = Rat(1) - p;
    Rat ex = Rat(M) * p;
    BigInt f = a.floor();
    if (f < 0) return ex - a;
    long fa = std::min<long>(static_cast<long>(mpz_get_si(f.get_mpz_t())), M);
    Rat term = pow(q, static_cast<unsigned long>(M)); // P(0)
    Rat pq = p / q;
    Rat s = 0;
    for (long c = 0; c <= fa; ++c) {
        s += (a - Rat(c)) * term;
        if (c < M) term *= pq * Rat(M - c, c + 1);
    }
    return (ex - a) + Rat(2) * s;
}

// Directed-rounding version: returns the partial-sum S rounded per `rnd`
// (all factors positive, so rounding propagates monotonically).
void binom_eabs_directed(long M, const Rat& p, const Rat& a, mpfr_prec_t prec, mpfr_rnd_t rnd,
                         mpfr_t out) {
    mpfr_set_q(out, ((Rat(M) * p) - a).mpq().get_mpq_t(), rnd); // EX - a
    if (p == Rat(1) || p.is_zero()) {
        Rat v = (p == Rat(1)) ? (Rat(M) - a).abs() : a;
        mpfr_set_q(out, v.mpq().get_mpq_t(), rnd);
        return;
    }
    Rat q = Rat(1) - p;
    long fa;
    {
        BigInt f = a.floor();
        fa = std::min<long>(static_cast<long>(mpz_get_si(f.get_mpz_t())), M);
    }
    mpfr_t term, pq, amc, s, tmp;
    mpfr_inits2(prec, term, pq, amc, s, tmp, static_cast<mpfr_ptr>(nullptr));
    // P(0) = q^M
    mpfr_set_q(term, q.mpq().get_mpq_t(), rnd);
    mpfr_pow_si(term, term, M, rnd);
    mpfr_set_q(pq, (p / q).mpq().get_mpq_t(), rnd);
    mpfr_set_q(amc, a.mpq().get_mpq_t(), rnd); // a - c, decremented in place
    mpfr_set_zero(s, 1);
    for (long c = 0; c <= fa; ++c) {
        mpfr_mul(tmp, amc, term, rnd);
        mpfr_add(s, s, tmp, rnd);
        if (c < M) {
            mpfr_mul(term, term, pq, rnd);
            mpfr_mul_si(term, term, M - c, rnd);
            mpfr_div_si(term, term, c + 1, rnd);
        }
        mpfr_sub_si(amc, amc, 1, rnd);
    }
    mpfr_mul_si(s, s, 2, rnd);
    mpfr_add(out, out, s, rnd);
    mpfr_clears(term, pq, amc, s, tmp, static_cast<mpfr_ptr>(nullptr));
}

IReal binom_eabs_enclosure(long M, const Rat& p, const Rat& a, mpfr_prec_t prec) {
    IReal out(prec);
    binom_eabs_directed(M, p, a, prec, MPFR_RNDD, out.lo());
    binom_eabs_directed(M, p, a, prec, MPFR_RNDU, out.hi());
    return out;
}

struct TwoHeights {
    long h_min_mass = 0, h_maj = 0; // heights of minority / majority mass classes
    Rat p_min, p_maj;               // total width-mass at each
};

std::vector<long> distinct_heights(const std::vector<ColumnClass>& lambda) {
    std::vector<long> hs;
    for (const auto& c : lambda)
        if (std::find(hs.begin(), hs.end(), c.height) == hs.end()) hs.push_back(c.height);
    std::sort(hs.begin(), hs.end());
    return hs;
}

// Exact defect via the full (c_i, H) lattice; cost grows like M^2 per class pair,
// so callers guard M. Used for mixed heights at small M and as the cross-check route.
Rat mfold_defect_exact_generic(const std::vector<ColumnClass>& lambda, long M) {
    Rat w = classes_width(lambda);
    Rat total = 0;
    for (const auto& target : lambda) {
        Rat p_t = target.width / w;
        // categories: the target column itself, the rest of its class, all other classes
        std::vector<std::pair<Rat, long>> cats; // (prob, height), first entry = target
        cats.emplace_back(p_t, target.height);
        if (target.mult > 1)
            cats.emplace_back(p_t * Rat(BigInt(target.mult - 1), BigInt(1)), target.height);
        for (const auto& cl : lambda) {
            if (cl.width == target.width && cl.height == target.height) continue;
            cats.emplace_back((cl.width / w) * Rat(cl.mult, 1), cl.height);
        }
        std::map<std::pair<long, long>, Rat> dist; // (c_target, H) -> prob
        dist[{0, 0}] = Rat(1);
        for (long t = 0; t < M; ++t) {
            std::map<std::pair<long, long>, Rat> next;
            for (const auto& [key, pr] : dist) {
                for (size_t j = 0; j < cats.size(); ++j) {
                    auto k2 = std::make_pair(key.first + (j == 0 ? 1 : 0), key.second + cats[j].second);
                    auto [it, fresh] = next.try_emplace(k2, Rat(0));
                    it->second += pr * cats[j].first;
                }
            }
            dist = std::move(next);
        }
        Rat e = 0;
        for (const auto& [key, pr] : dist)
            e += pr * (Rat(key.first) - target.width * Rat(key.second)).abs();
        total += Rat(target.mult, 1) * Rat(target.height) * e;
    }
    return (w / Rat(M)) * total;
}

} // namespace

Rat mfold_defect_exact(const std::vector<ColumnClass>& lambda, long M) {
    if (M < 1) throw invalid_parameter_error("M >= 1 required");
    auto hs = distinct_heights(lambda);
    Rat w = classes_width(lambda);
    if (hs.size() == 1) {
        long h = hs[0];
        Rat total = 0;
        for (const auto& cl : lambda) {
            Rat p = cl.width / w;
            Rat a = cl.width * Rat(h) * Rat(M); // w_i * H, H = hM
            total += Rat(cl.mult, 1) * Rat(cl.height) * binom_eabs_exact(M, p, a);
        }
        return (w / Rat(M)) * total;
    }
    if (M > 128)
        throw cannot_evaluate_error("exact mixed-height defect limited to M <= 128");
    return mfold_defect_exact_generic(lambda, M);
}

IReal mfold_defect_enclosure(const std::vector<ColumnClass>& lambda, long M, mpfr_prec_t prec) {
    if (M < 1) throw invalid_parameter_error("M >= 1 required");
    auto hs = distinct_heights(lambda);
    Rat w = classes_width(lambda);
    Rat wm = w / Rat(M);
    IReal wm_iv = IReal::from_rat(wm, prec);

    if (hs.size() == 1) {
        long h = hs[0];
        IReal total(prec);
        for (const auto& cl : lambda) {
            Rat p = cl.width / w;
            Rat a = cl.width * Rat(h) * Rat(M);
            IReal e = binom_eabs_enclosure(M, p, a, prec);
            IReal scale = IReal::from_rat(Rat(cl.mult, 1) * Rat(cl.height), prec);
            total = total + scale * e;
        }
        return wm_iv * total;
    }
    if (hs.size() != 2)
        throw cannot_evaluate_error("certified defect supports at most two distinct heights");

    TwoHeights th;
    Rat mass0 = 0, mass1 = 0;
    for (const auto& cl : lambda)
        (cl.height == hs[0] ? mass0 : mass1) += (cl.width / w) * Rat(cl.mult, 1);
    if (mass0 <= mass1) {
        th.h_min_mass = hs[0]; th.p_min = mass0; th.h_maj = hs[1]; th.p_maj = mass1;
    } else {
        th.h_min_mass = hs[1]; th.p_min = mass1; th.h_maj = hs[0]; th.p_maj = mass0;
    }

    // minority-count window with Hoeffding tail folded into the enclosure:
    // P(|d - M p_min| >= t) <= 2 exp(-2 t^2 / M) <= 2^-90 for t >= sqrt(M * 91 ln2 / 2)
    long t_win;
    {
        IReal arg = IReal::from_long(M, prec) * IReal::from_long(91, prec) *
                    IReal::from_rat(Rat(1, 2), prec) * IReal::from_long(2, prec).ln();
        Rat up = arg.sqrt().upper_rat();
        t_win = static_cast<long>(mpz_get_si(up.ceil().get_mpz_t())) + 1;
    }
    Rat ed = Rat(M) * th.p_min;
    long d_center = static_cast<long>(mpz_get_si(ed.floor().get_mpz_t()));
    long d_lo = std::max<long>(0, d_center - t_win);
    long d_hi = std::min<long>(M, d_center + t_win + 1);

    // rigorous slop for the discarded tail
    Rat smh = 0, lam = classes_support(lambda);
    for (const auto& cl : lambda) smh += Rat(cl.mult, 1) * Rat(cl.height);
    long h_max = std::max(th.h_min_mass, th.h_maj);
    Rat slop = Rat::pow2(-90) * (w * smh + w * lam * Rat(h_max));

    size_t window = static_cast<size_t>(d_hi - d_lo + 1);
    // cost estimate for the windowed-exact route; beyond it use the triangle bound
    double inner_cost = static_cast<double>(window) *
                        (lam.to_double() * static_cast<double>(M) + 8.0 * static_cast<double>(lambda.size()));
    if (inner_cost <= 2e8) {
        // windowed-exact: sum over minority count d of pmf(d) * E|c - w_i H(d)|
        IReal total(prec);
        for (mpfr_rnd_t pass : {MPFR_RNDD, MPFR_RNDU}) {
            mpfr_t pmf, acc, inner, tmp;
            mpfr_inits2(prec, pmf, acc, inner, tmp, static_cast<mpfr_ptr>(nullptr));
            mpfr_set_zero(acc, 1);
            // pmf(d_lo) = C(M, d_lo) p_min^d_lo (1-p_min)^(M-d_lo)
            {
                BigInt bin;
                mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(M),
                             static_cast<unsigned long>(d_lo));
                mpfr_set_z(pmf, bin.get_mpz_t(), pass);
                mpfr_set_q(tmp, th.p_min.mpq().get_mpq_t(), pass);
                mpfr_pow_si(tmp, tmp, d_lo, pass);
                mpfr_mul(pmf, pmf, tmp, pass);
                mpfr_set_q(tmp, (Rat(1) - th.p_min).mpq().get_mpq_t(), pass);
                mpfr_pow_si(tmp, tmp, M - d_lo, pass);
                mpfr_mul(pmf, pmf, tmp, pass);
            }
            mpfr_t ratio;
            mpfr_init2(ratio, prec);
            mpfr_set_q(ratio, (th.p_min / (Rat(1) - th.p_min)).mpq().get_mpq_t(), pass);
            for (long d = d_lo; d <= d_hi; ++d) {
                long H = th.h_maj * (M - d) + th.h_min_mass * d;
                mpfr_set_zero(inner, 1);
                for (const auto& cl : lambda) {
                    Rat p = cl.width / w;
                    Rat a = cl.width * Rat(H);
                    long n_cond;
                    Rat p_cond;
                    if (cl.height == th.h_min_mass) {
                        n_cond = d;
                        p_cond = p / th.p_min;
                    } else {
                        n_cond = M - d;
                        p_cond = p / th.p_maj;
                    }
                    if (p_cond > Rat(1)) p_cond = Rat(1); // guard exact-roundoff impossibility
                    binom_eabs_directed(n_cond, p_cond, a, prec, pass, tmp);
                    mpfr_t sc;
                    mpfr_init2(sc, prec);
                    mpfr_set_q(sc, (Rat(cl.mult, 1) * Rat(cl.height)).mpq().get_mpq_t(), pass);
                    mpfr_mul(tmp, tmp, sc, pass);
                    mpfr_add(inner, inner, tmp, pass);
                    mpfr_clear(sc);
                }
                mpfr_mul(tmp, inner, pmf, pass);
                mpfr_add(acc, acc, tmp, pass);
                // advance pmf
                if (d < d_hi) {
                    mpfr_mul_si(pmf, pmf, M - d, pass);
                    mpfr_div_si(pmf, pmf, d + 1, pass);
                    mpfr_mul(pmf, pmf, ratio, pass);
                }
            }
            if (pass == MPFR_RNDD)
                mpfr_set(total.lo(), acc, MPFR_RNDD);
            else
                mpfr_set(total.hi(), acc, MPFR_RNDU);
            mpfr_clears(pmf, acc, inner, tmp, ratio, static_cast<mpfr_ptr>(nullptr));
        }
        IReal out = wm_iv * total;
        // fold the tail slop in (lower end unchanged: discarded mass only lowers the sum)
        IReal slop_iv = IReal::from_rat(slop, prec);
        mpfr_add(out.hi(), out.hi(), slop_iv.hi(), MPFR_RNDU);
        return out;
    }

    // triangle-bound route: E|c - w_i H| within w_i*dh*E|d - Ed| of E|c - w_i*Hbar|
    Rat hbar = th.p_maj * Rat(th.h_maj) + th.p_min * Rat(th.h_min_mass); // mean slot height
    Rat Hbar = Rat(M) * hbar;
    long dh = std::max(th.h_maj, th.h_min_mass) - std::min(th.h_maj, th.h_min_mass);
    IReal mad_d = binom_eabs_enclosure(M, th.p_min, ed, prec);
    IReal core(prec);
    for (const auto& cl : lambda) {
        Rat p = cl.width / w;
        Rat a = cl.width * Hbar;
        IReal e = binom_eabs_enclosure(M, p, a, prec);
        core = core + IReal::from_rat(Rat(cl.mult, 1) * Rat(cl.height), prec) * e;
    }
    // slack = (dh * E|d-Ed| / M) * lambda_support
    IReal slack = IReal::from_long(dh, prec) * mad_d *
                  IReal::from_rat(lam / Rat(M), prec);
    IReal out = wm_iv * core;
    mpfr_sub(out.lo(), out.lo(), slack.hi(), MPFR_RNDD);
    mpfr_add(out.hi(), out.hi(), slack.hi(), MPFR_RNDU);
    mpfr_t zero;
    mpfr_init2(zero, prec);
    mpfr_set_zero(zero, 1);
    mpfr_max(out.lo(), out.lo(), zero, MPFR_RNDD);
    mpfr_clear(zero);
    return out;
}

} // namespace cutstack
