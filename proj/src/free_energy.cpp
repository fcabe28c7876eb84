#include "eulerchar/free_energy.hpp"

#include <sstream>
#include <tuple>

#include "eulerchar/error.hpp"
#include "eulerchar/series.hpp"

namespace eulerchar::genfunc {

const char* to_string(NamedConstant c) {
    switch (c) {
        case NamedConstant::log_two_pi: return "log(2pi)";
        case NamedConstant::zeta_prime_neg_one: return "zeta'(-1)";
        case NamedConstant::log_two: return "log(2)";
    }
    return "?";
}

bool SymbolicValue::is_pure_rational() const {
    for (const auto& [k, c] : constants)
        if (!c.is_zero()) return false;
    return true;
}

bool SymbolicValue::is_zero() const { return rational.is_zero() && is_pure_rational(); }

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& o) {
    rational += o.rational;
    for (const auto& [k, c] : o.constants) {
        auto it = constants.find(k);
        if (it == constants.end()) {
            constants.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) constants.erase(it);
        }
    }
    return *this;
}

SymbolicValue SymbolicValue::scaled(const Rational& c) const {
    SymbolicValue r;
    if (c.is_zero()) return r;
    r.rational = rational * c;
    for (const auto& [k, v] : constants) r.constants.emplace(k, v * c);
    return r;
}

bool operator==(const SymbolicValue& a, const SymbolicValue& b) {
    SymbolicValue d = a;
    d += b.scaled(Rational(-1));
    return d.is_zero();
}

std::string SymbolicValue::str() const {
    std::ostringstream os;
    os << rational.str();
    for (const auto& [k, c] : constants) os << " + " << c.str() << "*" << to_string(k);
    return os.str();
}

void T0Expr::add(Key k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

T0Expr T0Expr::power_term(long p, Rational c) {
    T0Expr e;
    e.add({-1, p, 0}, c);
    return e;
}

T0Expr T0Expr::log_term(long p, Rational c) {
    T0Expr e;
    e.add({-1, p, 1}, c);
    return e;
}

T0Expr T0Expr::constant_term(NamedConstant k, Rational c, long p) {
    T0Expr e;
    e.add({static_cast<int>(k), p, 0}, c);
    return e;
}

T0Expr& T0Expr::operator+=(const T0Expr& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

T0Expr T0Expr::derivative() const {
    T0Expr d;
    for (const auto& [k, c] : terms_) {
        // d/dt0 [c t0^p log^e] = c p t0^{p-1} log^e + c e t0^{p-1} log^{e-1}
        if (k.power != 0) d.add({k.ctag, k.power - 1, k.log_exp}, c * Rational(k.power));
        if (k.log_exp > 0) d.add({k.ctag, k.power - 1, k.log_exp - 1}, c * Rational(k.log_exp));
    }
    return d;
}

T0Expr T0Expr::derivative(long times) const {
    T0Expr d = *this;
    for (long i = 0; i < times; ++i) d = d.derivative();
    return d;
}

SymbolicValue T0Expr::eval_at_one() const {
    SymbolicValue v;
    for (const auto& [k, c] : terms_) {
        if (k.log_exp > 0) continue;  // log 1 = 0
        if (k.ctag < 0) {
            v.rational += c;
        } else {
            SymbolicValue part;
            part.constants.emplace(static_cast<NamedConstant>(k.ctag), c);
            v += part;
        }
    }
    return v;
}

std::vector<SymbolicValue> T0Expr::expand_at_one_plus(long order) const {
    std::vector<SymbolicValue> out(static_cast<size_t>(order));
    for (const auto& [k, c] : terms_) {
        // (1+h)^p, times log(1+h) when the term carries a log
        auto base = series::binomial_series(Rational(k.power), 1, Rational(1), order, "h");
        if (k.log_exp == 1) base = base * series::log1p_series(order, "h");
        for (long s = 0; s < order; ++s) {
            const Rational coeff = base.coefficient_or_zero(s) * c;
            if (coeff.is_zero()) continue;
            if (k.ctag < 0) {
                out[static_cast<size_t>(s)].rational += coeff;
            } else {
                SymbolicValue part;
                part.constants.emplace(static_cast<NamedConstant>(k.ctag), coeff);
                out[static_cast<size_t>(s)] += part;
            }
        }
    }
    return out;
}

Rational T0Expr::power_coefficient(long p) const {
    auto it = terms_.find({-1, p, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational T0Expr::log_power_coefficient(long p) const {
    auto it = terms_.find({-1, p, 1});
    return it == terms_.end() ? Rational(0) : it->second;
}

const char* to_string(Route r) {
    switch (r) {
        case Route::sw_route: return "sw-route";
        case Route::closed_form: return "closed-form";
        case Route::stated_lemma: return "stated-lemma";
        case Route::onept_chain: return "onept-chain";
        case Route::tr_chain: return "tr-chain";
    }
    return "?";
}

const char* to_string(SignConvention c) {
    return c == SignConvention::lemma ? "lemma" : "penner";
}

std::optional<Route> route_from_string(const std::string& s) {
    if (s == "sw-route" || s == "sw") return Route::sw_route;
    if (s == "closed-form") return Route::closed_form;
    if (s == "stated-lemma") return Route::stated_lemma;
    if (s == "onept-chain") return Route::onept_chain;
    if (s == "tr-chain") return Route::tr_chain;
    return std::nullopt;
}

std::optional<SignConvention> convention_from_string(const std::string& s) {
    if (s == "lemma") return SignConvention::lemma;
    if (s == "penner") return SignConvention::penner;
    return std::nullopt;
}

const Rational& KappaTable::at(long two_g, long s) const {
    auto it = entries.find({two_g, s});
    if (it == entries.end())
        throw DomainError("no kappa entry for (2g=" + std::to_string(two_g) +
                          ", s=" + std::to_string(s) + ")");
    return it->second;
}

std::vector<FreeEnergy> barnes_genus_terms(long g_max) {
    if (g_max < 0) throw ArgumentError("negative genus cap");
    std::vector<FreeEnergy> fs;
    fs.reserve(static_cast<size_t>(g_max) + 1);
    fs.push_back({0, T0Expr::log_term(2, Rational(1, 2)) + T0Expr::power_term(2, Rational(-3, 4))});
    if (g_max >= 1)
        fs.push_back({2, T0Expr::log_term(0, Rational(-1, 12)) +
                             T0Expr::constant_term(NamedConstant::zeta_prime_neg_one, Rational(1))});
    for (long g = 2; g <= g_max; ++g) {
        const Rational coeff = exact::bernoulli(2 * g) / Rational(4 * (g - 1) * g);
        fs.push_back({2 * g, T0Expr::power_term(2 - 2 * g, coeff)});
    }
    return fs;
}

std::vector<FreeEnergy> legendre_genus_terms(long g_max) {
    if (g_max < 0) throw ArgumentError("negative genus cap");
    std::vector<FreeEnergy> fs;
    fs.reserve(static_cast<size_t>(g_max) + 1);
    fs.push_back({0, T0Expr()});
    if (g_max >= 1)
        fs.push_back({2, T0Expr::log_term(0, Rational(-1, 4)) +
                             T0Expr::constant_term(NamedConstant::zeta_prime_neg_one, Rational(3)) +
                             T0Expr::constant_term(NamedConstant::log_two, Rational(1, 12))});
    for (long g = 2; g <= g_max; ++g) {
        const Rational coeff = exact::bernoulli(2 * g) / Rational((g - 1) * g) *
                               (Rational(1) - pow(Rational(1, 2), 2 * g));
        fs.push_back({2 * g, T0Expr::power_term(2 - 2 * g, coeff)});
    }
    return fs;
}

Rational kappa_sw_single(const FreeEnergy& f, long s, SignConvention conv) {
    if (s < 1) throw DomainError("kappa needs s >= 1");
    if (!stable(f.two_g, s))
        throw DomainError("unstable pair (2g=" + std::to_string(f.two_g) +
                          ", s=" + std::to_string(s) + ")");
    const SymbolicValue v = f.expr.derivative(s).eval_at_one();
    if (!v.is_pure_rational())
        throw DomainError("named constant survives t0-differentiation at (2g=" +
                          std::to_string(f.two_g) + ", s=" + std::to_string(s) + ")");
    Rational value = v.rational / exact::factorial(s);
    if (conv == SignConvention::lemma && s % 2 == 1) value = -value;
    return value;
}

KappaTable kappa_sw_route(const std::string& ensemble, std::span<const FreeEnergy> fs, long s_max,
                          SignConvention conv) {
    KappaTable table;
    table.ensemble = ensemble;
    table.route = Route::sw_route;
    table.convention = conv;
    for (const auto& f : fs)
        for (long s = 1; s <= s_max; ++s)
            if (stable(f.two_g, s))
                table.entries.emplace(std::make_pair(f.two_g, s), kappa_sw_single(f, s, conv));
    return table;
}

Rational kappa_closed_gaussian(long g, long s) {
    if (g < 0 || s < (g == 0 ? 3L : 1L)) throw DomainError("unstable pair for closed form");
    if (g == 0) return exact::factorial(s - 3) / exact::factorial(s);
    Rational v = exact::bernoulli(2 * g) * exact::factorial(2 * g + s - 3) /
                 (exact::factorial(s) * exact::factorial(2 * g - 2) * Rational(2 * g));
    if (s % 2 == 1) v = -v;
    return v;
}

Rational kappa_legendre_stated(long g) {
    if (g <= 0) throw DomainError("stated lemma needs g >= 1");
    if (g == 1) return Rational(-1, 4);
    return Rational(-2) * exact::bernoulli(2 * g) / Rational(g) *
           (Rational(1) - pow(Rational(1, 2), 2 * g));
}

Rational kappa_goe_nonorientable(long two_g, long s) {
    if (two_g > 0 && two_g % 2 == 0)
        throw DomainError("integer genus has no non-orientable part (see the closed form)");
    if (two_g < 1 || s < 1 || !stable(two_g, s)) throw DomainError("unstable non-orientable pair");
    if (two_g == 1) {
        // h^s coefficient of (1+h) log(1+h) / 2, s >= 2
        Rational v = Rational(1, 2) / Rational(s * (s - 1));
        return s % 2 == 0 ? v : -v;
    }
    const long k = (two_g - 1) / 2;
    const Rational ck = (pow(Rational(2), 2 * k - 1) - Rational(1)) / Rational(2 * k * (2 * k - 1));
    return -ck * exact::bernoulli(2 * k) * exact::binomial_rational_top(Rational(1 - 2 * k), s);
}

KappaTable kappa_goe_table(long two_g_max, long s_max) {
    KappaTable table;
    table.ensemble = "goe";
    table.route = Route::closed_form;
    for (long two_g = 1; two_g <= two_g_max; two_g += 2)
        for (long s = 1; s <= s_max; ++s)
            if (stable(two_g, s))
                table.entries.emplace(std::make_pair(two_g, s), kappa_goe_nonorientable(two_g, s));
    return table;
}

namespace {

// Exact bivariate data: (t0 power, h power, carries log t0) -> coefficient.
using Bivariate = std::map<std::tuple<long, long, int>, Rational>;

void bi_add(Bivariate& m, long t0_pow, long h_pow, int log_flag, const Rational& c) {
    if (c.is_zero()) return;
    const auto key = std::make_tuple(t0_pow, h_pow, log_flag);
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

Rational bi_get(const Bivariate& m, long t0_pow, long h_pow, int log_flag) {
    auto it = m.find(std::make_tuple(t0_pow, h_pow, log_flag));
    return it == m.end() ? Rational(0) : it->second;
}

Rational goe_sum_coeff(long k) {
    return (pow(Rational(2), 2 * k - 1) - Rational(1)) / Rational(2 * k * (2 * k - 1)) *
           exact::bernoulli(2 * k);
}

}  // namespace

CheckResult goe_shift_identity_check(long two_g_cap, long s_cap, long omit_phi_k) {
    const long order = s_cap + 1;
    const long k_max = (two_g_cap - 1) / 2;
    const auto log_series = series::log1p_series(order, "h");

    // printed series: t0/2 (1+h) log(1+h) - sum_k c_k B_2k t0^{1-2k} [(1+h)^{1-2k} - 1]
    Bivariate printed;
    {
        auto s = log_series + log_series.shifted(1);
        for (long j = 1; j < order; ++j)
            bi_add(printed, 1, j, 0, s.coefficient_or_zero(j) * Rational(1, 2));
        for (long k = 1; k <= k_max; ++k) {
            auto b = series::binomial_series(Rational(1 - 2 * k), 1, Rational(1), order, "h");
            for (long j = 1; j < order; ++j)
                bi_add(printed, 1 - 2 * k, j, 0, -goe_sum_coeff(k) * b.coefficient_or_zero(j));
        }
    }

    // shifted potential: Phi(t0(1+h)) - Phi(t0), Phi(u) = (u/2) log u - sum_k c_k B_2k u^{1-2k}
    Bivariate shifted;
    {
        bi_add(shifted, 1, 1, 1, Rational(1, 2));  // (t0/2)(1+h) log t0 - (t0/2) log t0
        auto s = log_series + log_series.shifted(1);
        for (long j = 1; j < order; ++j)
            bi_add(shifted, 1, j, 0, s.coefficient_or_zero(j) * Rational(1, 2));
        for (long k = 1; k <= k_max; ++k) {
            if (k == omit_phi_k) continue;
            auto b = series::binomial_series(Rational(1 - 2 * k), 1, Rational(1), order, "h");
            for (long j = 1; j < order; ++j)
                bi_add(shifted, 1 - 2 * k, j, 0, -goe_sum_coeff(k) * b.coefficient_or_zero(j));
        }
    }

    CheckResult res{"goe-shift-identity", CheckStatus::pass, ""};
    std::ostringstream bad;

    // the only log t0 remnant must be the linear-shift correction (t0 h / 2) log t0
    for (const auto& [key, c] : shifted) {
        const auto& [p, j, lf] = key;
        if (lf == 0) continue;
        if (!(p == 1 && j == 1 && c == Rational(1, 2)))
            bad << " unexpected log term at (t0^" << p << ", h^" << j << ")";
    }
    bi_add(shifted, 1, 1, 1, Rational(-1, 2));

    long checked = 0;
    for (long two_g = 1; two_g <= two_g_cap; two_g += 2) {
        const long p = 2 - two_g;
        for (long s = 1; s <= s_cap; ++s) {
            if (bi_get(printed, p, s, 0) != bi_get(shifted, p, s, 0))
                bad << " (2g=" << two_g << ", s=" << s << ")";
            ++checked;
        }
    }
    // support: odd t0 powers only
    for (const auto& [key, c] : printed)
        if (std::get<0>(key) % 2 == 0) bad << " even t0 power " << std::get<0>(key);

    if (!bad.str().empty()) {
        res.status = CheckStatus::fail;
        res.detail = "mismatch at" + bad.str();
    } else {
        res.detail = std::to_string(checked) + " coefficients equal";
    }
    return res;
}

PennerShiftResult penner_shift_check(long g_max, long s_max) {
    PennerShiftResult out;
    out.check = {"penner-shift", CheckStatus::pass, ""};
    out.table.ensemble = "gaussian";
    out.table.route = Route::sw_route;
    out.table.convention = SignConvention::penner;
    std::ostringstream bad;

    for (const auto& f : barnes_genus_terms(g_max)) {
        const auto lhs = f.expr.expand_at_one_plus(s_max + 1);
        for (long s = 1; s <= s_max; ++s) {
            const SymbolicValue rhs =
                f.expr.derivative(s).eval_at_one().scaled(Rational(1) / exact::factorial(s));
            if (!(lhs[static_cast<size_t>(s)] == rhs)) bad << " (2g=" << f.two_g << ", s=" << s << ")";
            if (stable(f.two_g, s) && rhs.is_pure_rational())
                out.table.entries.emplace(std::make_pair(f.two_g, s), rhs.rational);
        }
    }
    if (!bad.str().empty()) {
        out.check.status = CheckStatus::fail;
        out.check.detail = "Taylor-shift mismatch at" + bad.str();
    } else {
        out.check.detail = "shift identity exact through g<=" + std::to_string(g_max) + ", s<=" +
                           std::to_string(s_max);
    }
    return out;
}

CheckResult reconcile_conventions_gaussian(long g_max, long s_max) {
    CheckResult res{"reconcile-gaussian", CheckStatus::pass, ""};
    std::ostringstream bad;
    for (const auto& f : barnes_genus_terms(g_max)) {
        const long g = f.two_g / 2;
        for (long s = (g == 0 ? 3 : 1); s <= s_max; ++s) {
            const Rational sw = kappa_sw_single(f, s);
            const Rational closed = kappa_closed_gaussian(g, s);
            const Rational expected = g == 0 ? -closed : (s % 2 == 0 ? closed : -closed);
            if (sw != expected) bad << " (g=" << g << ", s=" << s << ")";
        }
    }
    if (!bad.str().empty()) {
        res.status = CheckStatus::fail;
        res.detail = "route ratio violated at" + bad.str();
    } else {
        res.detail = "sw = (-1)^s x closed (g>=1) and sw = -closed (g=0) hold through g<=" +
                     std::to_string(g_max) + ", s<=" + std::to_string(s_max);
    }
    return res;
}

CheckResult reconcile_conventions_legendre(long g_max, std::span<const Rational> onept_genus_sums) {
    CheckResult res{"reconcile-legendre", CheckStatus::pass, ""};
    std::ostringstream bad;
    const auto fs = legendre_genus_terms(g_max);
    for (long g = 1; g <= g_max; ++g) {
        const Rational sw = kappa_sw_single(fs[static_cast<size_t>(g)], 1);
        if (kappa_legendre_stated(g) != -sw) bad << " stated(g=" << g << ")";
        if (g - 1 < static_cast<long>(onept_genus_sums.size()) &&
            onept_genus_sums[static_cast<size_t>(g - 1)] != Rational(-2) * sw)
            bad << " genus-sum(g=" << g << ")";
    }
    if (!bad.str().empty()) {
        res.status = CheckStatus::fail;
        res.detail = "route ratio violated at" + bad.str();
    } else {
        res.detail = "stated = -1 x sw and genus sums = -2 x sw through g<=" + std::to_string(g_max);
    }
    return res;
}

}  // namespace eulerchar::genfunc
