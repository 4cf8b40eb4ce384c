#pragma once

#include <mpfr.h>

#include <functional>
#include <string>

#include "cutstack/rational.hpp"

namespace cutstack {

// Real interval [lo, hi] with outward rounding, backed by MPFR. Every
// transcendental comparison in the project goes through this type so that
// <= / > verdicts are rigorous.
class IReal {
public:
    explicit IReal(mpfr_prec_t prec = 192);
    IReal(const IReal& o);
    IReal(IReal&& o) noexcept;
    IReal& operator=(IReal o);
    ~IReal();

    mpfr_prec_t prec() const { return prec_; }

    static IReal from_rat(const Rat& r, mpfr_prec_t prec = 192);
    static IReal from_long(long v, mpfr_prec_t prec = 192);

    IReal operator+(const IReal& b) const;
    IReal operator-(const IReal& b) const;
    IReal operator*(const IReal& b) const;
    IReal operator/(const IReal& b) const;
    IReal neg() const;

    IReal log2() const;  // requires lo > 0
    IReal ln() const;    // requires lo > 0
    IReal exp() const;
    IReal sqrt() const;  // requires lo >= 0
    IReal pow_int(long e) const;

    // three-way certified comparisons against an exact rational
    bool definitely_less(const Rat& r) const;     // hi < r
    bool definitely_greater(const Rat& r) const;  // lo > r
    bool definitely_le(const Rat& r) const;       // hi <= r
    bool definitely_ge(const Rat& r) const;       // lo >= r
    bool definitely_less(const IReal& o) const;   // hi < o.lo
    bool contains(const Rat& r) const;

    // outward rational endpoints (exact values of the mpfr endpoints)
    Rat lower_rat() const;
    Rat upper_rat() const;
    double mid_double() const;
    std::string str(int digits = 8) const;

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Evaluates `expr` at growing precision until `decide` returns a definite
// verdict; throws cannot_evaluate_error past max_prec (value sits exactly on
// the boundary or the expression is degenerate).
bool decide_with_precision(const std::function<int(mpfr_prec_t)>& attempt,
                           mpfr_prec_t start_prec = 128, mpfr_prec_t max_prec = 1 << 14);

// Certified comparison: is `lhs` <= exp-expression-style value computed by builder?
// builder must produce an enclosure of the right-hand side at the given precision.
bool certified_le(const Rat& lhs, const std::function<IReal(mpfr_prec_t)>& rhs,
                  mpfr_prec_t start_prec = 128);
bool certified_less(const Rat& lhs, const std::function<IReal(mpfr_prec_t)>& rhs,
                    mpfr_prec_t start_prec = 128);

} // namespace cutstack
