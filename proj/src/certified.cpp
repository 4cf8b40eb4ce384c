#include "cutstack/certified.hpp"

#include <sstream>
#include <utility>

#include "cutstack/errors.hpp"

namespace cutstack {

IReal::IReal(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

IReal::IReal(const IReal& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

IReal::IReal(IReal&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

IReal& IReal::operator=(IReal o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

IReal::~IReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

IReal IReal::from_rat(const Rat& r, mpfr_prec_t prec) {
    IReal out(prec);
    mpfr_set_q(out.lo_, r.mpq().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, r.mpq().get_mpq_t(), MPFR_RNDU);
    return out;
}

IReal IReal::from_long(long v, mpfr_prec_t prec) {
    IReal out(prec);
    mpfr_set_si(out.lo_, v, MPFR_RNDD);
    mpfr_set_si(out.hi_, v, MPFR_RNDU);
    return out;
}

IReal IReal::operator+(const IReal& b) const {
    IReal out(prec_);
    mpfr_add(out.lo_, lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, b.hi_, MPFR_RNDU);
    return out;
}

IReal IReal::operator-(const IReal& b) const {
    IReal out(prec_);
    mpfr_sub(out.lo_, lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, hi_, b.lo_, MPFR_RNDU);
    return out;
}

IReal IReal::neg() const {
    IReal out(prec_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

IReal IReal::operator*(const IReal& b) const {
    // four corner products with directed rounding
    IReal out(prec_);
    mpfr_t c[8];
    for (auto& x : c) mpfr_init2(x, prec_);
    mpfr_mul(c[0], lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[1], lo_, b.hi_, MPFR_RNDD);
    mpfr_mul(c[2], hi_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[3], hi_, b.hi_, MPFR_RNDD);
    mpfr_mul(c[4], lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[5], lo_, b.hi_, MPFR_RNDU);
    mpfr_mul(c[6], hi_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[7], hi_, b.hi_, MPFR_RNDU);
    mpfr_min(out.lo_, c[0], c[1], MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, c[2], MPFR_RNDD);
    mpfr_min(out.lo_, out.lo_, c[3], MPFR_RNDD);
    mpfr_max(out.hi_, c[4], c[5], MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, c[6], MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, c[7], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return out;
}

IReal IReal::operator/(const IReal& b) const {
    if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0)
        throw cannot_evaluate_error("interval division by interval containing zero");
    return *this * b.pow_int(-1);
}

IReal IReal::pow_int(long e) const {
    if (e == 1) return *this;
    if (e == -1) {
        IReal out(prec_);
        if (mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0)
            throw cannot_evaluate_error("interval inverse across zero");
        mpfr_si_div(out.lo_, 1, hi_, MPFR_RNDD);
        mpfr_si_div(out.hi_, 1, lo_, MPFR_RNDU);
        return out;
    }
    if (e == 0) return from_long(1, prec_);
    if (e < 0) return pow_int(-e).pow_int(-1);
    // positive e: monotone for nonnegative intervals; restrict to that case
    if (mpfr_sgn(lo_) < 0) throw cannot_evaluate_error("pow_int on negative interval");
    IReal out(prec_);
    mpfr_pow_si(out.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_si(out.hi_, hi_, e, MPFR_RNDU);
    return out;
}

IReal IReal::log2() const {
    if (mpfr_sgn(lo_) <= 0) throw cannot_evaluate_error("log2 of interval touching <= 0");
    IReal out(prec_);
    mpfr_log2(out.lo_, lo_, MPFR_RNDD);
    mpfr_log2(out.hi_, hi_, MPFR_RNDU);
    return out;
}

IReal IReal::ln() const {
    if (mpfr_sgn(lo_) <= 0) throw cannot_evaluate_error("ln of interval touching <= 0");
    IReal out(prec_);
    mpfr_log(out.lo_, lo_, MPFR_RNDD);
    mpfr_log(out.hi_, hi_, MPFR_RNDU);
    return out;
}

IReal IReal::exp() const {
    IReal out(prec_);
    mpfr_exp(out.lo_, lo_, MPFR_RNDD);
    mpfr_exp(out.hi_, hi_, MPFR_RNDU);
    return out;
}

IReal IReal::sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw cannot_evaluate_error("sqrt of interval touching < 0");
    IReal out(prec_);
    mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
    return out;
}

bool IReal::definitely_less(const Rat& r) const {
    return mpfr_cmp_q(hi_, r.mpq().get_mpq_t()) < 0;
}
bool IReal::definitely_greater(const Rat& r) const {
    return mpfr_cmp_q(lo_, r.mpq().get_mpq_t()) > 0;
}
bool IReal::definitely_le(const Rat& r) const {
    return mpfr_cmp_q(hi_, r.mpq().get_mpq_t()) <= 0;
}
bool IReal::definitely_ge(const Rat& r) const {
    return mpfr_cmp_q(lo_, r.mpq().get_mpq_t()) >= 0;
}
bool IReal::definitely_less(const IReal& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
bool IReal::contains(const Rat& r) const {
    return mpfr_cmp_q(lo_, r.mpq().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, r.mpq().get_mpq_t()) >= 0;
}

Rat IReal::lower_rat() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return Rat(q);
}

Rat IReal::upper_rat() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return Rat(q);
}

double IReal::mid_double() const {
    return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

std::string IReal::str(int digits) const {
    char* slo = nullptr;
    char* shi = nullptr;
    mpfr_asprintf(&slo, "%.*Rg", digits, lo_);
    mpfr_asprintf(&shi, "%.*Rg", digits, hi_);
    std::string out = std::string("[") + slo + ", " + shi + "]";
    mpfr_free_str(slo);
    mpfr_free_str(shi);
    return out;
}

bool decide_with_precision(const std::function<int(mpfr_prec_t)>& attempt,
                           mpfr_prec_t start_prec, mpfr_prec_t max_prec) {
    for (mpfr_prec_t p = start_prec; p <= max_prec; p *= 2) {
        int v = attempt(p);
        if (v > 0) return true;
        if (v < 0) return false;
    }
    throw cannot_evaluate_error("certified comparison undecided at max precision");
}

bool certified_le(const Rat& lhs, const std::function<IReal(mpfr_prec_t)>& rhs,
                  mpfr_prec_t start_prec) {
    return decide_with_precision(
        [&](mpfr_prec_t p) -> int {
            IReal r = rhs(p);
            if (r.definitely_ge(lhs)) return 1;   // lhs <= rhs certainly
            if (r.definitely_less(lhs)) return -1; // rhs < lhs certainly
            return 0;
        },
        start_prec);
}

bool certified_less(const Rat& lhs, const std::function<IReal(mpfr_prec_t)>& rhs,
                    mpfr_prec_t start_prec) {
    return decide_with_precision(
        [&](mpfr_prec_t p) -> int {
            IReal r = rhs(p);
            if (r.definitely_greater(lhs)) return 1;
            if (r.definitely_le(lhs)) return -1;
            return 0;
        },
        start_prec);
}

} // namespace cutstack
