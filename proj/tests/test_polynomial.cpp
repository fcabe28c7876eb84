#include <doctest.h>

#include "eulerchar/polynomial.hpp"

using namespace eulerchar;
using exact::Rational;
using series::Polynomial;

TEST_CASE("polynomial canonical form") {
    Polynomial p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    CHECK(Polynomial().is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("arithmetic and evaluation") {
    auto x = Polynomial::x();
    auto q = x * x - Polynomial::constant(Rational(4));
    CHECK(q.degree() == 2);
    CHECK(q.eval(Rational(3)) == Rational(5));
    CHECK(q.derivative() == x.scaled(Rational(2)));
}

TEST_CASE("division with remainder") {
    auto x = Polynomial::x();
    auto p = x * x * x - x.scaled(Rational(2)) + Polynomial::constant(Rational(5));
    auto d = x - Polynomial::constant(Rational(1));
    auto [quo, rem] = Polynomial::divmod(p, d);
    CHECK(quo * d + rem == p);
    CHECK(rem.degree() < d.degree());
    CHECK(rem == Polynomial::constant(p.eval(Rational(1))));
    CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial()), ArgumentError);
}

TEST_CASE("gcd is monic") {
    auto x = Polynomial::x();
    auto a = x * x - Polynomial::constant(Rational(4));
    auto b = x - Polynomial::constant(Rational(2));
    CHECK(Polynomial::gcd(a, b) == b);
    CHECK(Polynomial::gcd(a.scaled(Rational(7, 3)), b.scaled(Rational(-2))) == b);
}

TEST_CASE("definite integrals over rational intervals") {
    auto x = Polynomial::x();
    CHECK((x * x).definite_integral(Rational(-2), Rational(2)) == Rational(16, 3));
    CHECK((x * x * x).definite_integral(Rational(-2), Rational(2)) == Rational(0));
    CHECK(x.definite_integral(Rational(0), Rational(1, 2)) == Rational(1, 8));
}
