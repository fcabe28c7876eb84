// Genus free energies and the routes from them to virtual Euler
// characteristics: the t0-derivative rule, closed forms, the shift
// identities, and the non-orientable series.
//
// Genus labels are stored as 2g (integer) so half-integer genus needs no
// floating point; stable means 2g - 2 + s > 0.
#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulerchar/check_report.hpp"
#include "eulerchar/rational.hpp"

namespace eulerchar::genfunc {

using exact::Rational;

// Symbolic constants that appear in the expansions.  They are never
// evaluated inside the exact routes; only the asymptotic numeric check
// assigns them floating values.
enum class NamedConstant { log_two_pi, zeta_prime_neg_one, log_two };

const char* to_string(NamedConstant c);

// A rational number plus rational multiples of the named constants.
struct SymbolicValue {
    Rational rational;
    std::map<NamedConstant, Rational> constants;

    bool is_pure_rational() const;
    bool is_zero() const;
    SymbolicValue& operator+=(const SymbolicValue& o);
    SymbolicValue scaled(const Rational& c) const;
    friend bool operator==(const SymbolicValue& a, const SymbolicValue& b);
    std::string str() const;
};

// Exact function of t0 in the class spanned by K * t0^p * (log t0)^e with
// e in {0,1} and K one of the named constants (or 1).  The class is closed
// under d/dt0, which is all the derivative route needs.
class T0Expr {
public:
    T0Expr() = default;

    static T0Expr power_term(long p, Rational c);
    static T0Expr log_term(long p, Rational c);  // c * t0^p * log t0
    static T0Expr constant_term(NamedConstant k, Rational c, long p = 0);

    T0Expr& operator+=(const T0Expr& o);
    friend T0Expr operator+(T0Expr a, const T0Expr& b) { return a += b; }

    T0Expr derivative() const;
    T0Expr derivative(long times) const;

    // log terms vanish at t0 = 1; named constants survive symbolically.
    SymbolicValue eval_at_one() const;

    // Coefficients of expr(1 + h) as a truncated series in h
    // (powers 0 .. order-1).
    std::vector<SymbolicValue> expand_at_one_plus(long order) const;

    bool is_zero() const { return terms_.empty(); }

    // Named field views.
    Rational power_coefficient(long p) const;  // plain t0^p term
    Rational log_coefficient() const { return log_power_coefficient(0); }
    Rational sqlog_coefficient() const { return log_power_coefficient(2); }
    Rational log_power_coefficient(long p) const;  // t0^p log t0 term

private:
    // key: (constant tag: -1 none else NamedConstant, power, log exponent)
    struct Key {
        int ctag;
        long power;
        int log_exp;
        auto operator<=>(const Key&) const = default;
    };
    void add(Key k, const Rational& c);

    std::map<Key, Rational> terms_;
};

// One genus term of a free energy: F = sum_g N^{2-2g} F_g(t0).
struct FreeEnergy {
    long two_g = 0;
    T0Expr expr;
};

enum class Route { sw_route, closed_form, stated_lemma, onept_chain, tr_chain };
enum class SignConvention { lemma, penner };

const char* to_string(Route r);
const char* to_string(SignConvention c);
std::optional<Route> route_from_string(const std::string& s);
std::optional<SignConvention> convention_from_string(const std::string& s);

struct KappaTable {
    std::string ensemble;
    Route route = Route::sw_route;
    SignConvention convention = SignConvention::lemma;
    std::map<std::pair<long, long>, Rational> entries;  // (2g, s) -> value

    const Rational& at(long two_g, long s) const;
};

inline bool stable(long two_g, long s) { return two_g - 2 + s > 0; }

// ---- free energies from the double-factorial asymptotics --------------------

// Gaussian genus terms F_0 .. F_{g_max}: F_0 = t0^2 (log(t0)/2 - 3/4),
// F_1 = -log(t0)/12 + zeta'(-1), F_g = B_{2g}/(4(g-1)g) t0^{2-2g}.
std::vector<FreeEnergy> barnes_genus_terms(long g_max);

// Legendre genus terms: F_0 = 0, F_1 = -log(t0)/4 + 3 zeta'(-1) + log(2)/12,
// F_g = B_{2g}/((g-1)g) (1 - 2^{-2g}) t0^{2-2g}.
std::vector<FreeEnergy> legendre_genus_terms(long g_max);

// ---- kappa routes ------------------------------------------------------------

// kappa_{g,s} = (-1)^s / s! * d^s F_g / dt0^s at t0 = 1 (lemma convention);
// penner convention drops the (-1)^s.  Throws DomainError on unstable pairs
// or when a named constant would leak into the value.
Rational kappa_sw_single(const FreeEnergy& f, long s, SignConvention conv = SignConvention::lemma);

KappaTable kappa_sw_route(const std::string& ensemble, std::span<const FreeEnergy> fs, long s_max,
                          SignConvention conv = SignConvention::lemma);

// (s-3)!/s! for g = 0; B_{2g} (2g+s-3)! / (s! (2g-2)! 2g) * (-1)^s for g >= 1.
Rational kappa_closed_gaussian(long g, long s);

// -1/4 for g = 1; -2 B_{2g}/g (1 - 2^{-2g}) for g >= 2.
Rational kappa_legendre_stated(long g);

// Non-orientable half-integer-genus addition (two_g odd).
Rational kappa_goe_nonorientable(long two_g, long s);

KappaTable kappa_goe_table(long two_g_max, long s_max);

// ---- structural checks --------------------------------------------------------

// Verifies that the non-orientable series is the shifted-argument expansion
// of a single potential, coefficient by coefficient on the (2g, s) grid.
// omit_phi_k (test hook) drops one potential term to prove failures surface.
CheckResult goe_shift_identity_check(long two_g_cap, long s_cap, long omit_phi_k = 0);

// Taylor-shift identity F_g(1+h) - F_g(1) = sum_s h^s/s! d^s F_g|_1 for the
// Gaussian genus terms, checked coefficientwise; also returns the resulting
// penner-convention kappa table.
struct PennerShiftResult {
    CheckResult check;
    KappaTable table;
};
PennerShiftResult penner_shift_check(long g_max, long s_max);

// Exact inter-route sign relations.  For legendre the genus sums of the
// u-basis route enter as data (computed by the onept module); pass an empty
// span to skip that comparison.
CheckResult reconcile_conventions_gaussian(long g_max, long s_max);
CheckResult reconcile_conventions_legendre(long g_max, std::span<const Rational> onept_genus_sums);

}  // namespace eulerchar::genfunc
