#include "eulerchar/rational.hpp"

#include <atomic>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <vector>

namespace eulerchar::exact {

Rational::Rational(long num, long den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    mpq_class q;
    if (s.empty() || q.set_str(std::string(s), 10) != 0)
        throw ArgumentError("unparseable rational: '" + std::string(s) + "'");
    if (q.get_den() == 0) throw ArgumentError("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArgumentError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw ArgumentError("to_integer on non-integer " + str());
    return v_.get_num();
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r.is_zero()) {
        if (e < 0) throw ArgumentError("0 to a negative power");
        return Rational(0);
    }
    Integer num, den;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), r.num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(), a);
    return e > 0 ? Rational(num, den) : Rational(den, num);
}

Rational factorial(long n) {
    if (n < 0) throw ArgumentError("factorial of negative integer");
    Integer z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

Rational double_factorial(long n) {
    if (n < -1) throw ArgumentError("double factorial below -1");
    if (n <= 0) return Rational(1);
    Integer z;
    mpz_2fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(z);
}

Rational binomial(long n, long k) {
    if (k < 0) throw ArgumentError("binomial with negative k");
    Integer z;
    if (n >= 0) {
        mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(z);
    }
    // C(n,k) = (-1)^k C(k-n-1, k) for n < 0
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? Rational(z) : -Rational(z);
}

Rational rising_product(const Rational& a, long j) {
    if (j < 0) throw ArgumentError("rising product with negative length");
    Rational p(1);
    for (long i = 0; i < j; ++i) p *= a + Rational(i);
    return p;
}

Rational falling_product(const Rational& a, long j) {
    if (j < 0) throw ArgumentError("falling product with negative length");
    Rational p(1);
    for (long i = 0; i < j; ++i) p *= a - Rational(i);
    return p;
}

Rational binomial_rational_top(const Rational& alpha, long j) {
    return falling_product(alpha, j) / factorial(j);
}

namespace {

std::atomic<long> g_bernoulli_cap{256};

// Full table including odd indices (zero beyond B_1); grown on demand via
// sum_{j<=m} C(m+1,j) B_j = [m == 0].
struct BernoulliTable {
    std::shared_mutex mutex;
    std::vector<Rational> values;  // values[m] = B_m

    void extend(long m) {
        std::unique_lock lock(mutex);
        if (static_cast<long>(values.size()) > m) return;
        if (values.empty()) values.push_back(Rational(1));
        for (long i = static_cast<long>(values.size()); i <= m; ++i) {
            Rational acc(0);
            for (long j = 0; j < i; ++j)
                acc += binomial(i + 1, j) * values[static_cast<size_t>(j)];
            values.push_back(-acc / Rational(i + 1));
        }
    }
};

BernoulliTable& bernoulli_table() {
    static BernoulliTable t;
    return t;
}

}  // namespace

long bernoulli_cap() { return g_bernoulli_cap.load(); }

void set_bernoulli_cap(long cap) {
    if (cap < 0) throw ArgumentError("negative Bernoulli cap");
    g_bernoulli_cap.store(cap);
}

Rational bernoulli(long m) {
    if (m < 0 || m % 2 != 0) throw ArgumentError("Bernoulli index must be even and nonnegative");
    if (m > bernoulli_cap()) throw ArgumentError("Bernoulli index beyond configured cap");
    auto& table = bernoulli_table();
    {
        std::shared_lock lock(table.mutex);
        if (static_cast<long>(table.values.size()) > m) return table.values[static_cast<size_t>(m)];
    }
    table.extend(m);
    std::shared_lock lock(table.mutex);
    return table.values[static_cast<size_t>(m)];
}

}  // namespace eulerchar::exact
