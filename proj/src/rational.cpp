#include "cutstack/rational.hpp"

#include <ostream>

#include "cutstack/errors.hpp"

namespace cutstack {

Rat::Rat(long n, long d) {
    if (d == 0) throw invalid_parameter_error("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rat::Rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw invalid_parameter_error("rational with zero denominator");
    q_ = mpq_class(n);
    q_ /= mpq_class(d);
}

Rat Rat::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw invalid_parameter_error("malformed rational: '" + s + "'");
    if (q.get_den() == 0)
        throw invalid_parameter_error("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

Rat Rat::pow2(long e) {
    mpq_class q(1);
    if (e >= 0) {
        mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return Rat(q);
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool Rat::is_dyadic() const {
    mpz_class d = q_.get_den();
    // d is a power of two iff its scan for the lowest set bit finds the only bit
    return mpz_popcount(d.get_mpz_t()) == 1;
}

long Rat::exact_log2() const {
    if (sgn(q_) <= 0) throw invalid_parameter_error("exact_log2 of nonpositive value");
    mpz_class n = q_.get_num(), d = q_.get_den();
    if (mpz_popcount(n.get_mpz_t()) != 1 || mpz_popcount(d.get_mpz_t()) != 1)
        throw invalid_parameter_error("value is not a power of two: " + str());
    long ln = static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
    long ld = static_cast<long>(mpz_scan1(d.get_mpz_t(), 0));
    return ln - ld;
}

BigInt Rat::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

BigInt Rat::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) throw invalid_parameter_error("inverse of zero");
    return Rat(mpq_class(1) / q_);
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw invalid_parameter_error("division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, unsigned long e) {
    mpq_class out(1);
    mpz_pow_ui(out.get_num_mpz_t(), base.mpq().get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.mpq().get_den().get_mpz_t(), e);
    out.canonicalize();
    return Rat(out);
}

} // namespace cutstack
