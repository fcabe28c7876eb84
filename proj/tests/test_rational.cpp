#include <doctest.h>

#include "eulerchar/rational.hpp"
#include "eulerchar/series.hpp"

using namespace eulerchar;
using exact::Rational;

TEST_CASE("rational basics stay reduced") {
    Rational r(6, -4);
    CHECK(r == Rational(-3, 2));
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational::from_string("-3/2") == r);
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK_THROWS_AS(Rational::from_string("1/0"), ArgumentError);
    CHECK_THROWS_AS(Rational::from_string("x"), ArgumentError);
    CHECK_THROWS_AS(Rational(1, 0), ArgumentError);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("bernoulli values and argument checking") {
    CHECK(exact::bernoulli(0) == Rational(1));
    CHECK(exact::bernoulli(2) == Rational(1, 6));
    CHECK(exact::bernoulli(4) == Rational(-1, 30));
    CHECK(exact::bernoulli(6) == Rational(1, 42));
    CHECK(exact::bernoulli(8) == Rational(-1, 30));
    CHECK(exact::bernoulli(10) == Rational(5, 66));
    CHECK_THROWS_AS(exact::bernoulli(3), ArgumentError);
    CHECK_THROWS_AS(exact::bernoulli(-2), ArgumentError);
    CHECK_THROWS_AS(exact::bernoulli(exact::bernoulli_cap() + 2), ArgumentError);
}

TEST_CASE("bernoulli sign alternates from B_2 on") {
    for (long m = 2; m <= 64; m += 2) {
        const int expected = (m / 2) % 2 == 1 ? 1 : -1;
        CHECK(exact::bernoulli(m).sign() == expected);
    }
}

TEST_CASE("bernoulli generator identity to order 30") {
    // l/(e^l - 1) as the inverse of sum_{j>=1} l^{j-1}/j!
    const long order = 31;
    series::TruncatedSeries expfrac("l", order);
    for (long j = 1; j <= order; ++j)
        expfrac.set_coefficient(j - 1, Rational(1) / exact::factorial(j));
    auto lhs = expfrac.inverted();

    series::TruncatedSeries rhs("l", order);
    rhs.set_coefficient(0, Rational(1));
    rhs.set_coefficient(1, Rational(-1, 2));
    for (long m = 2; m <= 30; m += 2)
        rhs.set_coefficient(m, exact::bernoulli(m) / exact::factorial(m));

    for (long m = 0; m <= 30; ++m) CHECK(lhs.coefficient(m) == rhs.coefficient(m));
}

TEST_CASE("factorial kernels") {
    CHECK(exact::factorial(0) == Rational(1));
    CHECK(exact::factorial(5) == Rational(120));
    CHECK(exact::double_factorial(5) == Rational(15));
    CHECK(exact::double_factorial(-1) == Rational(1));
    CHECK(exact::double_factorial(0) == Rational(1));
    CHECK(exact::double_factorial(6) == Rational(48));
    CHECK(exact::binomial(4, 2) == Rational(6));
    CHECK(exact::binomial(0, 0) == Rational(1));
    CHECK_THROWS_AS(exact::factorial(-1), ArgumentError);
    CHECK_THROWS_AS(exact::double_factorial(-2), ArgumentError);
    CHECK_THROWS_AS(exact::binomial(4, -1), ArgumentError);
    CHECK(exact::rising_product(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(exact::falling_product(Rational(4), 2) == Rational(12));
}

TEST_CASE("binomial with rational top") {
    CHECK(exact::binomial_rational_top(Rational(-3, 2), 1) == Rational(-3, 2));
    CHECK(exact::binomial_rational_top(Rational(-3, 2), 2) == Rational(15, 8));
    CHECK(exact::binomial_rational_top(Rational(7, 9), 0) == Rational(1));
    // agrees with the integer binomial whenever the top is a nonneg integer
    for (long n = 0; n <= 9; ++n)
        for (long k = 0; k <= 12; ++k)
            CHECK(exact::binomial(n, k) == exact::binomial_rational_top(Rational(n), k));
}
