#include "eulerchar/polynomial.hpp"

#include <algorithm>

namespace eulerchar::series {

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Rational> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(v * c);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
    return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw ArgumentError("polynomial division by zero");
    Polynomial rem = p;
    std::vector<Rational> quo;
    const long dq = q.degree();
    if (rem.degree() >= dq) quo.assign(static_cast<size_t>(rem.degree() - dq) + 1, Rational(0));
    const Rational lead = q.c_.back();
    while (!rem.is_zero() && rem.degree() >= dq) {
        const long shift = rem.degree() - dq;
        const Rational f = rem.c_.back() / lead;
        quo[static_cast<size_t>(shift)] = f;
        std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
        for (const auto& c : q.c_) sub.push_back(c * f);
        rem = rem - Polynomial(std::move(sub));
    }
    return {Polynomial(std::move(quo)), std::move(rem)};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rational(1) / a.c_.back());  // monic
}

Rational Polynomial::definite_integral(const Rational& a, const Rational& b) const {
    Rational hi(0), lo(0);
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational f = c_[i] / Rational(static_cast<long>(i) + 1);
        hi += f * pow(b, static_cast<long>(i) + 1);
        lo += f * pow(a, static_cast<long>(i) + 1);
    }
    return hi - lo;
}

}  // namespace eulerchar::series
