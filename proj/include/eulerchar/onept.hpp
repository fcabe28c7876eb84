// Legendre one-point-function machinery: the resolvent coefficient tables
// from the third-order ODE, the five-term recursion (corrected and printed
// variants), and the finite expansions in the u-basis with their own
// recursions.
#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "eulerchar/check_report.hpp"
#include "eulerchar/rational.hpp"
#include "eulerchar/series.hpp"

namespace eulerchar::onept {

using exact::Rational;

// Leading coefficient on f_g(k) in the five-term recursion: the printed
// variant uses 4k^2, the corrected one (2k-1)^2 (forced by resubstituting
// the Laurent ansatz into the ODE; the ODE solver asserts this).
enum class FiveTermVariant { corrected, printed };

enum class TableSource { five_term_corrected, five_term_printed, ode_derived };

// Triangular table of f_g(k); eps_g(k) = C(2k,k) f_g(k) are the x^{-2k-1}
// resolvent coefficients.
struct EpsilonTable {
    TableSource source = TableSource::five_term_corrected;
    long g_max = 0;
    long k_max = 0;
    std::map<std::pair<long, long>, Rational> f;  // (g, k)

    const Rational& f_at(long g, long k) const;
    Rational eps(long g, long k) const;

    friend bool operator==(const EpsilonTable& a, const EpsilonTable& b) {
        return a.f == b.f;
    }
};

// f_{g+1}(k) from the complete genus-g row, telescoping from f_{g+1}(0) = 0.
// lower_row[j] must hold f_g(j) for j <= k.
Rational f_recursion_step(FiveTermVariant variant, std::span<const Rational> lower_row, long k);

EpsilonTable build_f_table(FiveTermVariant variant, long g_max, long k_max);

// Order-by-order solution of the one-point ODE with the central-binomial
// planar seed and eps_g(0) = 0 boundary for g >= 1.  Also re-derives the
// five-term identity from the operator itself and verifies it matches the
// corrected variant coefficientwise (VerificationError otherwise).
EpsilonTable ode_series_solve(long g_max, long k_max);

// The ODE in w = 1/x, split as L0 + N^2 L2; exposed for the finite-N checks.
series::TruncatedSeries onept_ode_l0(const series::TruncatedSeries& w_series);
series::TruncatedSeries onept_ode_l2(const series::TruncatedSeries& w_series);

// ---- u-basis tables ----------------------------------------------------------

// r_n^{(g)} for 0 <= n <= g-1, and kappa_n^{(g)} = r_n^{(g)} u_integral(n);
// both maps are built by their own three-term recursions and must agree.
struct UCoeffTable {
    long g_max = 0;
    std::map<std::pair<long, long>, Rational> r;
    std::map<std::pair<long, long>, Rational> kappa;

    Rational r_at(long g, long n) const;      // zero outside 0 <= n <= g-1
    Rational kappa_at(long g, long n) const;  // likewise
    std::vector<Rational> r_row(long g) const;
};

UCoeffTable r_table(long g_max);

// int (e^l - e^-l)^{-(2n+2)} dl over the real line: (-1)^{n+1}/2 (n!)^2/(2n+1)!.
Rational u_integral(long n);

// Builds the kappa rows by their recursion and cross-checks every entry
// against r * u_integral; mismatch throws VerificationError.
UCoeffTable kappa_n_table(long g_max);

// Row sum sum_n kappa_n^{(g)}.
Rational kappa_g1_sum(long g);

// Expands sum_n row[n] x^{-(2n+3)} (1 - 4 x^{-2})^{-(2n+3)/2} to the
// x^{-2k-1} basis; result[k] for k = 0..k_max.
std::vector<Rational> u_to_x_convert(std::span<const Rational> row, long k_max);

// Endpoint identities of the r-recursion: r_0^{(g)} = 4^{1-g}, the derived
// top value 2[(2g-1)!!]^2(2g-3)!!/(2g)!!, and integrality of 4^{g-1} r_n^{(g)}.
// The second result records that the printed top formula is exactly half the
// recursion's value (expected mismatch, not a failure).
std::vector<CheckResult> r_endpoint_checks(long g_max);

// eps^{ode}_g(k) = -1/2 * eps^{u-basis}_g(k) on the whole grid; when the
// t0-derivative values are supplied (index g-1 holding kappa_{g,1}), also
// checks kappa_{g,1} = -1/2 * kappa_g1_sum(g).
CheckResult normalization_ratio_check(long g_max, long k_max,
                                      std::span<const Rational> sw_kappa_g1 = {});

}  // namespace eulerchar::onept
