#include "eulerchar/series.hpp"

#include <algorithm>

namespace eulerchar::series {

TruncatedSeries TruncatedSeries::monomial(std::string var, long exponent, Rational coeff, long trunc) {
    TruncatedSeries s(std::move(var), trunc);
    s.set_coefficient(exponent, std::move(coeff));
    return s;
}

const Rational& TruncatedSeries::coefficient(long k) const {
    if (k >= trunc_)
        throw ExpansionDepthError("coefficient at exponent " + std::to_string(k) +
                                  " beyond truncation order " + std::to_string(trunc_));
    static const Rational zero(0);
    auto it = coeff_.find(k);
    return it == coeff_.end() ? zero : it->second;
}

Rational TruncatedSeries::coefficient_or_zero(long k) const {
    auto it = coeff_.find(k);
    return it == coeff_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coefficient(long k, Rational c) {
    if (k >= trunc_) throw ExpansionDepthError("setting coefficient beyond truncation order");
    if (c.is_zero())
        coeff_.erase(k);
    else
        coeff_[k] = std::move(c);
}

void TruncatedSeries::check_same_variable(const TruncatedSeries& o) const {
    if (var_ != o.var_)
        throw ArgumentError("series variable mismatch: '" + var_ + "' vs '" + o.var_ + "'");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_same_variable(o);
    trunc_ = std::min(trunc_, o.trunc_);
    for (const auto& [k, c] : o.coeff_) {
        if (k >= trunc_) break;
        auto it = coeff_.find(k);
        if (it == coeff_.end()) {
            coeff_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeff_.erase(it);
        }
    }
    // drop own terms that fell beyond the tightened bound
    coeff_.erase(coeff_.lower_bound(trunc_), coeff_.end());
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(var_, trunc_);
    for (const auto& [k, c] : coeff_) r.coeff_.emplace(k, -c);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_variable(b);
    const long trunc = std::min(a.trunc_ + b.valuation_bound(), b.trunc_ + a.valuation_bound());
    TruncatedSeries r(a.var_, trunc);
    for (const auto& [ka, ca] : a.coeff_) {
        for (const auto& [kb, cb] : b.coeff_) {
            const long k = ka + kb;
            if (k >= trunc) break;  // kb ascending, later ones only larger
            auto it = r.coeff_.find(k);
            if (it == r.coeff_.end()) {
                r.coeff_.emplace(k, ca * cb);
            } else {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.coeff_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r(var_, trunc_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeff_) r.coeff_.emplace(k, v * c);
    return r;
}

TruncatedSeries TruncatedSeries::shifted(long k, const Rational& c) const {
    TruncatedSeries r(var_, trunc_ + k);
    if (c.is_zero()) return TruncatedSeries(var_, trunc_ + k);
    for (const auto& [e, v] : coeff_) r.coeff_.emplace(e + k, v * c);
    return r;
}

TruncatedSeries TruncatedSeries::differentiated() const {
    TruncatedSeries r(var_, trunc_ - 1);
    for (const auto& [k, v] : coeff_) {
        if (k == 0) continue;
        r.coeff_.emplace(k - 1, v * Rational(k));
    }
    return r;
}

TruncatedSeries TruncatedSeries::antidifferentiated() const {
    if (!coefficient_or_zero(-1).is_zero())
        throw ResidueError("antiderivative of a series with a simple-pole term");
    TruncatedSeries r(var_, trunc_ + 1);
    for (const auto& [k, v] : coeff_) {
        if (k == -1) continue;  // already known zero
        r.coeff_.emplace(k + 1, v / Rational(k + 1));
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverted() const {
    if (coeff_.empty()) throw ArgumentError("inverting a series with no known nonzero term");
    const long val = coeff_.begin()->first;
    const Rational lead = coeff_.begin()->second;
    // 1/(lead z^val (1 + tail)) with the known tail length preserved
    const long n = trunc_ - val;  // number of known coefficients from the valuation
    TruncatedSeries tail(var_, n);  // normalized: tail[j] = coeff(val+j)/lead, tail[0] = 1
    for (const auto& [k, v] : coeff_) tail.coeff_.emplace(k - val, v / lead);
    TruncatedSeries inv(var_, n);
    inv.coeff_.emplace(0, Rational(1));
    for (long j = 1; j < n; ++j) {
        Rational acc(0);
        for (const auto& [i, c] : inv.coeff_) {
            if (i >= j) break;
            acc += c * tail.coefficient_or_zero(j - i);
        }
        if (!acc.is_zero()) inv.coeff_.emplace(j, -acc);
    }
    // 1/s = (1/lead) z^{-val} (1+tail)^{-1}, known to n - val
    return inv.shifted(-val, Rational(1) / lead);
}

TruncatedSeries TruncatedSeries::truncated_to(long trunc) const {
    TruncatedSeries r(var_, std::min(trunc, trunc_));
    for (const auto& [k, v] : coeff_) {
        if (k >= r.trunc_) break;
        r.coeff_.emplace(k, v);
    }
    return r;
}

TruncatedSeries binomial_series(const Rational& alpha, long u_power, const Rational& scale,
                                long order, const std::string& var) {
    if (u_power < 1) throw ArgumentError("binomial_series requires u_power >= 1");
    TruncatedSeries r(var, order);
    for (long j = 0; j * u_power < order; ++j)
        r.set_coefficient(j * u_power, exact::binomial_rational_top(alpha, j) * pow(scale, j));
    return r;
}

TruncatedSeries log1p_series(long order, const std::string& var) {
    TruncatedSeries r(var, order);
    for (long j = 1; j < order; ++j)
        r.set_coefficient(j, Rational(j % 2 == 1 ? 1 : -1, j));
    return r;
}

}  // namespace eulerchar::series
