// Dense univariate polynomials over exact rationals.
#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "eulerchar/error.hpp"
#include "eulerchar/rational.hpp"

namespace eulerchar::series {

using exact::Rational;

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { normalize(); }
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { normalize(); }

    static Polynomial constant(Rational c) { return Polynomial({std::move(c)}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coefficient(long k) const {
        return (k < 0 || k >= static_cast<long>(c_.size())) ? Rational(0) : c_[static_cast<size_t>(k)];
    }
    const std::vector<Rational>& coefficients() const { return c_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial derivative() const;
    Rational eval(const Rational& x) const;

    // Exact Euclidean division; q must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& q);

    // Monic gcd (zero if both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    // Exact integral over [a, b].
    Rational definite_integral(const Rational& a, const Rational& b) const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;  // ascending powers, no trailing zeros
};

}  // namespace eulerchar::series
