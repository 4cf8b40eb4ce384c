#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cutstack {

using BigInt = mpz_class;

// Exact rational in canonical form (gcd(num,den)=1, den>0). Thin value wrapper
// over GMP's mpq_class; every constructor canonicalizes.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rat(long n, long d);
    Rat(const BigInt& n, const BigInt& d);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Parses "p/q" or "p". Throws invalid_parameter_error on malformed input or q=0.
    static Rat from_string(const std::string& s);
    // 2^e for any integer e.
    static Rat pow2(long e);

    const mpq_class& mpq() const { return q_; }
    BigInt num() const { return BigInt(q_.get_num()); }
    BigInt den() const { return BigInt(q_.get_den()); }
    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }
    // "p/q", or just "p" when q==1.
    std::string str() const;

    double to_double() const { return q_.get_d(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }
    // den is a power of two
    bool is_dyadic() const;
    // exact log2 if the value is a power of two, else throws invalid_parameter_error
    long exact_log2() const;

    BigInt floor() const;
    BigInt ceil() const;

    Rat abs() const { Rat r; r.q_ = ::abs(q_); return r; }
    Rat inv() const;

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
    Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }
    Rat& operator*=(const Rat& b) { q_ *= b.q_; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;
};

Rat pow(const Rat& base, unsigned long e);

} // namespace cutstack
