// Exact rational scalar and the combinatorial number kernels built on it.
// Every value in the library is one of these; no floating point enters
// outside the asymptotic numeric check.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "eulerchar/error.hpp"

namespace eulerchar::exact {

using Integer = mpz_class;

// Arbitrary-precision rational, always reduced, denominator >= 1.
// Thin value wrapper over GMP's mpq so the rest of the library sees a
// fixed surface (string form "p/q", exact comparisons, integer powers).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}             // NOLINT
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "p", "-p", or "p/q" (decimal).  Throws ArgumentError on junk.
    static Rational from_string(std::string_view s);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Exact truncation toward zero; valid only on integers when exact=true.
    Integer to_integer() const;

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

Rational abs(const Rational& r);

// r^e for any integer e (e < 0 requires r != 0).
Rational pow(const Rational& r, long e);

// ---- combinatorial kernels -------------------------------------------------

// n!, exact.  n < 0 throws.
Rational factorial(long n);

// n!! with the empty-product conventions (-1)!! = 0!! = 1.  n < -1 throws.
Rational double_factorial(long n);

// C(n, k) for integer n (any sign), k >= 0.  k < 0 throws.
Rational binomial(long n, long k);

// a (a+1) ... (a+j-1), j factors.
Rational rising_product(const Rational& a, long j);

// a (a-1) ... (a-j+1), j factors.
Rational falling_product(const Rational& a, long j);

// Generalized binomial coefficient: alpha (alpha-1) ... (alpha-j+1) / j!.
Rational binomial_rational_top(const Rational& alpha, long j);

// ---- Bernoulli numbers -----------------------------------------------------

// B_m for even m in the convention where 1/(e^l - 1) = 1/l - 1/2 +
// sum_k B_{2k} l^{2k-1} / (2k)!, i.e. B_2 = 1/6, B_4 = -1/30.
// Odd or negative m, or m beyond the cap, throws ArgumentError.
// Computed once by the convolution recurrence and memoized; the memo is
// safe for concurrent readers with single-writer insertion.
Rational bernoulli(long m);

// Default 256; raising it just allows deeper tables.
long bernoulli_cap();
void set_bernoulli_cap(long cap);

}  // namespace eulerchar::exact
