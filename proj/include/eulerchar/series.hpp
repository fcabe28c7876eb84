// Truncated univariate Laurent series over exact rationals.
//
// A series stores the exact coefficients of every exponent below its
// truncation order; absent exponents below the order are exactly zero,
// exponents at or above it are unknown.  All arithmetic propagates the
// tightest truncation order that remains exact, so a computed coefficient
// is never silently wrong -- asking for an unknown one throws.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "eulerchar/error.hpp"
#include "eulerchar/rational.hpp"

namespace eulerchar::series {

using exact::Rational;

class TruncatedSeries {
public:
    // The zero series known up to (not including) `trunc`.
    TruncatedSeries(std::string var, long trunc) : var_(std::move(var)), trunc_(trunc) {}

    static TruncatedSeries monomial(std::string var, long exponent, Rational coeff, long trunc);

    const std::string& variable() const { return var_; }
    long truncation_order() const { return trunc_; }
    const std::map<long, Rational>& terms() const { return coeff_; }
    bool known_zero() const { return coeff_.empty(); }

    // Smallest stored exponent; `trunc` when no term is stored (the series
    // is then zero on its whole known range).
    long valuation_bound() const { return coeff_.empty() ? trunc_ : coeff_.begin()->first; }

    // Exact coefficient of var^k.  k >= truncation order throws
    // ExpansionDepthError: the value is not known, not zero.
    const Rational& coefficient(long k) const;

    // Coefficient lookup that treats unknown exponents as an error-free
    // zero; only for callers that have a separate exactness argument.
    Rational coefficient_or_zero(long k) const;

    void set_coefficient(long k, Rational c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;

    TruncatedSeries scaled(const Rational& c) const;

    // Multiplication by c * var^k (exact, shifts the truncation bound).
    TruncatedSeries shifted(long k, const Rational& c = Rational(1)) const;

    TruncatedSeries differentiated() const;

    // Termwise antiderivative with zero integration constant; a nonzero
    // coefficient at exponent -1 throws ResidueError.
    TruncatedSeries antidifferentiated() const;

    // Multiplicative inverse; requires the lowest known coefficient to be
    // nonzero (i.e. the valuation is known exactly).
    TruncatedSeries inverted() const;

    TruncatedSeries truncated_to(long trunc) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.var_ == b.var_ && a.trunc_ == b.trunc_ && a.coeff_ == b.coeff_;
    }

private:
    void check_same_variable(const TruncatedSeries& o) const;

    std::string var_;
    std::map<long, Rational> coeff_;  // exponent -> nonzero coefficient, all < trunc_
    long trunc_;
};

// (1 + scale * z^u_power)^alpha truncated at `order`:
// sum_j binomial_rational_top(alpha, j) scale^j z^(j*u_power).
TruncatedSeries binomial_series(const Rational& alpha, long u_power, const Rational& scale,
                                long order, const std::string& var = "z");

// log(1 + z) truncated at `order`.
TruncatedSeries log1p_series(long order, const std::string& var = "z");

}  // namespace eulerchar::series
