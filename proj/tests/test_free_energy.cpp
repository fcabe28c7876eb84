#include <doctest.h>

#include "eulerchar/free_energy.hpp"

using namespace eulerchar;
using namespace eulerchar::genfunc;
using exact::Rational;

TEST_CASE("gaussian genus terms") {
    auto fs = barnes_genus_terms(4);
    REQUIRE(fs.size() == 5);
    CHECK(fs[0].expr.sqlog_coefficient() == Rational(1, 2));
    CHECK(fs[0].expr.power_coefficient(2) == Rational(-3, 4));
    CHECK(fs[1].expr.log_coefficient() == Rational(-1, 12));
    CHECK(fs[2].expr.power_coefficient(-2) == Rational(-1, 240));
    CHECK(fs[3].expr.power_coefficient(-4) == Rational(1, 1008));
}

TEST_CASE("legendre genus terms") {
    auto fs = legendre_genus_terms(3);
    CHECK(fs[0].expr.is_zero());
    CHECK(fs[1].expr.log_coefficient() == Rational(-1, 4));
    CHECK(fs[2].expr.power_coefficient(-2) == Rational(-1, 64));
    CHECK(fs[3].expr.power_coefficient(-4) == Rational(1, 256));
}

TEST_CASE("t0 derivative route") {
    auto gauss = barnes_genus_terms(2);
    CHECK(kappa_sw_single(gauss[1], 1) == Rational(1, 12));
    CHECK(kappa_sw_single(gauss[2], 1) == Rational(-1, 120));
    auto leg = legendre_genus_terms(4);
    CHECK(kappa_sw_single(leg[1], 1) == Rational(1, 4));
    CHECK(kappa_sw_single(leg[2], 1) == Rational(-1, 32));
    CHECK(kappa_sw_single(leg[3], 1) == Rational(1, 64));
    CHECK(kappa_sw_single(leg[4], 1) == Rational(-17, 1024));
    CHECK_THROWS_AS(kappa_sw_single(gauss[0], 2), DomainError);  // unstable (0,2)
    CHECK(kappa_sw_single(gauss[0], 3) == Rational(-1, 6));
    // penner convention drops the (-1)^s
    CHECK(kappa_sw_single(gauss[0], 3, SignConvention::penner) == Rational(1, 6));
}

TEST_CASE("derivatives of pure powers follow the falling product") {
    for (long g = 2; g <= 6; ++g) {
        auto e = T0Expr::power_term(2 - 2 * g, Rational(1));
        for (long s = 1; s <= 8; ++s)
            CHECK(e.derivative(s).eval_at_one().rational ==
                  exact::falling_product(Rational(2 - 2 * g), s));
    }
}

TEST_CASE("closed form for the gaussian ensemble") {
    CHECK(kappa_closed_gaussian(0, 3) == Rational(1, 6));
    CHECK(kappa_closed_gaussian(1, 1) == Rational(-1, 12));
    CHECK(kappa_closed_gaussian(2, 1) == Rational(1, 120));
    CHECK_THROWS_AS(kappa_closed_gaussian(0, 2), DomainError);
}

TEST_CASE("stated legendre values") {
    CHECK(kappa_legendre_stated(1) == Rational(-1, 4));
    CHECK(kappa_legendre_stated(2) == Rational(1, 32));
    CHECK(kappa_legendre_stated(3) == Rational(-1, 64));
    CHECK_THROWS_AS(kappa_legendre_stated(0), DomainError);
}

TEST_CASE("non-orientable half-genus values") {
    CHECK(kappa_goe_nonorientable(1, 2) == Rational(1, 4));
    CHECK(kappa_goe_nonorientable(1, 3) == Rational(-1, 12));
    CHECK(kappa_goe_nonorientable(3, 1) == Rational(1, 12));
    CHECK_THROWS_AS(kappa_goe_nonorientable(2, 2), DomainError);  // integer genus
    CHECK_THROWS_AS(kappa_goe_nonorientable(1, 1), DomainError);  // unstable
    auto table = kappa_goe_table(3, 4);
    CHECK(table.at(1, 2) == Rational(1, 4));
    CHECK(table.entries.count({1, 1}) == 0);
}

TEST_CASE("goe shift-structure identity") {
    auto full = goe_shift_identity_check(9, 8);
    CHECK(full.status == CheckStatus::pass);
    auto trivial = goe_shift_identity_check(9, 1);
    CHECK(trivial.status == CheckStatus::pass);
    auto perturbed = goe_shift_identity_check(9, 8, 2);
    CHECK(perturbed.status == CheckStatus::fail);
    CHECK(perturbed.detail.find("2g=5") != std::string::npos);
}

TEST_CASE("penner shift identity and table") {
    auto r = penner_shift_check(4, 6);
    CHECK(r.check.status == CheckStatus::pass);
    // h-series of -log(1+h)/12 at genus one
    for (long s = 1; s <= 6; ++s) {
        Rational expect = Rational(1, 12 * s);
        if (s % 2 == 1) expect = -expect;
        CHECK(r.table.at(2, s) == expect);
    }
    CHECK(r.table.at(0, 3) == Rational(1, 6));
    CHECK(r.table.at(4, 1) == Rational(1, 120));
}

TEST_CASE("convention reconciliation") {
    CHECK(reconcile_conventions_gaussian(6, 8).status == CheckStatus::pass);
    const Rational sums[] = {Rational(-1, 2), Rational(1, 16), Rational(-1, 32), Rational(17, 512)};
    CHECK(reconcile_conventions_legendre(4, sums).status == CheckStatus::pass);
    const Rational wrong[] = {Rational(-1, 2), Rational(1, 8)};
    auto bad = reconcile_conventions_legendre(2, wrong);
    CHECK(bad.status == CheckStatus::fail);
    CHECK(bad.detail.find("genus-sum(g=2)") != std::string::npos);
}

TEST_CASE("sw table emission") {
    auto fs = barnes_genus_terms(2);
    auto t = kappa_sw_route("gaussian", fs, 3);
    CHECK(t.at(2, 1) == Rational(1, 12));
    CHECK(t.at(4, 2) == kappa_closed_gaussian(2, 2));  // even s: routes agree
    CHECK(t.entries.count({0, 2}) == 0);               // unstable never emitted
    CHECK(t.at(0, 3) == Rational(-1, 6));
}
