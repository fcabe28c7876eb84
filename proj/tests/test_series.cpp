#include <doctest.h>

#include <random>

#include "eulerchar/series.hpp"

using namespace eulerchar;
using exact::Rational;
using series::TruncatedSeries;

namespace {

TruncatedSeries random_series(std::mt19937& rng, long lo, long trunc) {
    TruncatedSeries s("z", trunc);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    for (long k = lo; k < trunc; ++k)
        if (rng() % 3 != 0) s.set_coefficient(k, Rational(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("derivative of a Laurent monomial") {
    auto s = TruncatedSeries::monomial("z", -2, Rational(1), 5);
    auto d = s.differentiated();
    CHECK(d.coefficient(-3) == Rational(-2));
    CHECK(d.coefficient(0) == Rational(0));
}

TEST_CASE("truncated product") {
    TruncatedSeries a("z", 5), b("z", 5);
    a.set_coefficient(0, Rational(1));
    a.set_coefficient(1, Rational(1));
    b.set_coefficient(0, Rational(1));
    b.set_coefficient(1, Rational(-1));
    auto p = a * b;
    CHECK(p.coefficient(0) == Rational(1));
    CHECK(p.coefficient(1) == Rational(0));
    CHECK(p.coefficient(2) == Rational(-1));
    CHECK(p.truncation_order() == 5);
}

TEST_CASE("antidifferentiation rejects simple poles") {
    auto s = TruncatedSeries::monomial("z", -1, Rational(3), 4);
    CHECK_THROWS_AS(s.antidifferentiated(), ResidueError);
    auto ok = TruncatedSeries::monomial("z", -3, Rational(4), 4);
    CHECK(ok.antidifferentiated().coefficient(-2) == Rational(-2));
}

TEST_CASE("coefficient access beyond the truncation bound throws") {
    TruncatedSeries s("z", 3);
    CHECK(s.coefficient(2) == Rational(0));
    CHECK_THROWS_AS(s.coefficient(3), ExpansionDepthError);
    TruncatedSeries other("w", 3);
    CHECK_THROWS_AS(s + other, ArgumentError);
}

TEST_CASE("differentiate then antidifferentiate is identity away from the constant") {
    std::mt19937 rng(7);
    for (int round = 0; round < 40; ++round) {
        auto s = random_series(rng, -4, 9);
        s.set_coefficient(-1, Rational(0));  // integrable
        auto back = s.differentiated().antidifferentiated();
        for (long k = -4; k < back.truncation_order(); ++k) {
            if (k == 0) continue;  // integration constant not recovered
            CHECK(back.coefficient(k) == s.coefficient(k));
        }
    }
}

TEST_CASE("product is commutative and associative at matching truncation") {
    std::mt19937 rng(11);
    for (int round = 0; round < 25; ++round) {
        auto a = random_series(rng, -2, 7);
        auto b = random_series(rng, 0, 6);
        auto c = random_series(rng, -1, 8);
        auto ab = a * b, ba = b * a;
        CHECK(ab == ba);
        auto l = (a * b) * c, r = a * (b * c);
        CHECK(l.truncation_order() == r.truncation_order());
        CHECK(l == r);
    }
}

TEST_CASE("series inversion") {
    // 1/(1 - z) = geometric series
    TruncatedSeries s("z", 8);
    s.set_coefficient(0, Rational(1));
    s.set_coefficient(1, Rational(-1));
    auto inv = s.inverted();
    for (long k = 0; k < 8; ++k) CHECK(inv.coefficient(k) == Rational(1));
    // with a pole shift: 1/(2 z^-2 (1+z)) has valuation 2
    auto t = TruncatedSeries::monomial("z", -2, Rational(2), 4) +
             TruncatedSeries::monomial("z", -1, Rational(2), 4);
    auto ti = t.inverted();
    CHECK(ti.coefficient(2) == Rational(1, 2));
    CHECK(ti.coefficient(3) == Rational(-1, 2));
}

TEST_CASE("binomial series expansions") {
    auto g = series::binomial_series(Rational(-3, 2), 2, Rational(-4), 6);
    CHECK(g.coefficient(0) == Rational(1));
    CHECK(g.coefficient(2) == Rational(6));
    CHECK(g.coefficient(4) == Rational(30));

    auto lin = series::binomial_series(Rational(1), 3, Rational(5, 2), 8);
    CHECK(lin.coefficient(0) == Rational(1));
    CHECK(lin.coefficient(3) == Rational(5, 2));
    CHECK(lin.coefficient(6) == Rational(0));

    auto geo = series::binomial_series(Rational(-1), 1, Rational(-1), 9);
    for (long k = 0; k < 9; ++k) CHECK(geo.coefficient(k) == Rational(1));

    // binomial theorem for integer exponents
    for (long n = 0; n <= 10; ++n) {
        auto s = series::binomial_series(Rational(n), 1, Rational(1), n + 3);
        for (long k = 0; k <= n + 2; ++k) CHECK(s.coefficient(k) == exact::binomial(n, k));
    }
}
