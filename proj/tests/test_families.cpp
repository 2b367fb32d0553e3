#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/families.hpp"

using namespace eulerkind;

namespace {

const std::vector<Rational> kSample = {Rational(1),    Rational(-1), Rational(2),
                                       Rational(1, 2), Rational(3, 5), Rational(-2)};

// Independent partition-counting oracle: assign each of n labeled elements to
// one of k labeled blocks, count surjections, divide by k!.
Rational stirling2_by_enumeration(unsigned n, unsigned k) {
    if (n == 0 && k == 0) return Rational(1);
    if (k == 0) return Rational(0);
    unsigned long surjections = 0;
    std::vector<unsigned> assign(n, 0);
    while (true) {
        unsigned used_mask = 0;
        for (unsigned block : assign) used_mask |= 1u << block;
        if (used_mask == (1u << k) - 1) ++surjections;
        std::size_t pos = 0;
        while (pos < n && assign[pos] == k - 1) assign[pos++] = 0;
        if (pos == n) break;
        ++assign[pos];
    }
    return Rational(Int(surjections)) / Rational(factorial(k));
}

} // namespace

TEST_CASE("y1 closed sum") {
    for (const auto& lam : kSample) CHECK(y1(1, 1, lam) == lam);
    for (unsigned k = 0; k <= 8; ++k)
        CHECK(y1(0, k, Rational(1)) ==
              int_pow(Rational(2), k) / Rational(factorial(k)));
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(y1(n, 0, Rational(3, 5)) == (n == 0 ? Rational(1) : Rational(0)));
}

TEST_CASE("big_B values") {
    for (unsigned k = 1; k <= 8; ++k)
        CHECK(big_B(1, k) == Rational(Int(k)) * int_pow(Rational(2), k - 1));
    for (unsigned n = 1; n <= 6; ++n) CHECK(big_B(n, 0) == Rational(0));
    CHECK(big_B(2, 2) == Rational(6));
}

TEST_CASE("y2 closed sum") {
    CHECK(y2(0, 1, Rational(1)) == Rational(2));
    CHECK(y2(1, 1, Rational(1)) == Rational(0));
    CHECK_THROWS_AS(y2(1, 1, Rational(0)), ZeroLambdaError);
    // (2k)! y2(n,1;lambda) matches the order -1 row: lambda + 2 + 1/lambda, lambda - 1/lambda, ...
    for (const auto& lam : kSample) {
        if (lam.is_zero()) continue;
        CHECK(Rational(2) * y2(0, 1, lam) == lam + Rational(2) + lam.reciprocal());
        CHECK(Rational(2) * y2(1, 1, lam) == lam - lam.reciprocal());
        CHECK(Rational(2) * y2(2, 1, lam) == lam + lam.reciprocal());
    }
}

TEST_CASE("y2 bridges to y3 at doubled order") {
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned k = 0; k <= 4; ++k)
            for (const auto& lam : kSample)
                CHECK(y2(n, k, lam) == int_pow(lam.reciprocal(), k) *
                                           y3(n, 2 * k, lam, Rational(1, 2), Rational(-1, 2)));
}

TEST_CASE("y3 special values") {
    for (unsigned n = 0; n <= 8; ++n)
        for (const auto& lam : kSample) {
            const Rational a(2), b(-3);
            CHECK(y3(n, 1, lam, a, b) == int_pow(a, n) * lam + int_pow(b, n));
        }
    // a = b collapses to (ak)^n (1+lambda)^k / k!
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned k = 0; k <= 5; ++k)
            for (const auto& lam : kSample) {
                const Rational a(3, 2);
                CHECK(y3(n, k, lam, a, a) ==
                      int_pow(a * Rational(Int(k)), n) * int_pow(Rational(1) + lam, k) /
                          Rational(factorial(k)));
            }
    CHECK(y3(0, 0, Rational(7), Rational(2), Rational(5)) == Rational(1));
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(y3(n, 0, Rational(7), Rational(2), Rational(5)) == Rational(0));
}

TEST_CASE("stirling2 against enumeration and recurrence") {
    CHECK(stirling2(4, 2) == Rational(7));
    CHECK(stirling2(4, 2) == stirling2_by_enumeration(4, 2));
    for (unsigned n = 0; n <= 7; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(stirling2(n, k) == stirling2_by_enumeration(n, k));
    for (unsigned n = 1; n <= 15; ++n) {
        CHECK(stirling2(n, n) == Rational(1));
        CHECK(stirling2(n, 1) == Rational(1));
        CHECK(stirling2(n, 0) == Rational(0));
    }
    CHECK(stirling2(3, 5) == Rational(0));
    CHECK(stirling2(3, -1) == Rational(0));
    for (unsigned n = 1; n <= 15; ++n)
        for (unsigned k = 1; k <= 15; ++k)
            CHECK(stirling2(n, k) ==
                  stirling2(n - 1, static_cast<long long>(k) - 1) +
                      Rational(Int(k)) * stirling2(n - 1, k));
}

TEST_CASE("lambda-Stirling numbers") {
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned v = 0; v <= 6; ++v)
            CHECK(lambda_stirling2(n, v, Rational(1)) == stirling2(n, v));
    for (const auto& lam : kSample)
        CHECK(lambda_stirling2(0, 1, lam) == lam - Rational(1));
    for (unsigned v = 0; v <= 5; ++v) {
        const auto s = lambda_stirling2_series(v, Rational(7, 3), 10);
        for (unsigned n = 0; n <= 10; ++n)
            CHECK(s.egf_coeff(n) == lambda_stirling2(n, v, Rational(7, 3)));
    }
}

TEST_CASE("array polynomials") {
    const Rational x(2, 7);
    for (unsigned n = 0; n <= 8; ++n) {
        CHECK(array_poly(n, 0, x, Rational(1)) == int_pow(x, n));
        CHECK(array_poly(n, n, x, Rational(1)) == Rational(1));
        for (unsigned k = n + 1; k <= n + 4; ++k)
            CHECK(array_poly(n, k, x, Rational(1)) == Rational(0));
    }
}

TEST_CASE("central factorial numbers") {
    for (unsigned n = 1; n <= 8; ++n) CHECK(central_T(n, 1) == Rational(1));
    CHECK(central_T(3, 2) == Rational(5));
    CHECK(central_T(4, 3) == Rational(14));
    CHECK(central_T(0, 0) == Rational(1));
    for (unsigned k = 1; k <= 4; ++k) CHECK(central_T(0, k) == Rational(0));
}

TEST_CASE("bernstein basis") {
    CHECK(bernstein(0, 4, Rational(0)) == Rational(1));
    CHECK_THROWS_AS(bernstein(5, 4, Rational(1, 2)), IndexOutOfRangeError);
    const Rational x(2, 7);
    for (unsigned n = 0; n <= 10; ++n) {
        Rational sum;
        for (unsigned m = 0; m <= n; ++m) sum += bernstein(m, n, x);
        CHECK(sum == Rational(1));
    }
    // exact integral over [0,1]: expand (1-x)^(n-m) binomially and integrate
    // monomials, an oracle independent of the closed 1/(n+1) claim
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned m = 0; m <= n; ++m) {
            Rational integral;
            for (unsigned j = 0; j <= n - m; ++j)
                integral += Rational(sign_pow(j) * binomial(n - m, j)) /
                            Rational(Int(static_cast<long>(m + j) + 1));
            integral *= Rational(binomial(n, m));
            CHECK(integral == Rational(1, static_cast<long>(n) + 1));
        }
}

TEST_CASE("oracle equivalence for every family") {
    const std::size_t order = 10;
    for (unsigned k = 0; k <= 4; ++k) {
        for (const auto& lam : kSample) {
            const auto s1 = y1_series(k, lam, order);
            const auto sl = lambda_stirling2_series(k, lam, order);
            for (unsigned n = 0; n <= order; ++n) {
                CHECK(s1.egf_coeff(n) == y1(n, k, lam));
                CHECK(sl.egf_coeff(n) == lambda_stirling2(n, k, lam));
            }
            if (!lam.is_zero()) {
                const auto s2 = y2_series(k, lam, order);
                for (unsigned n = 0; n <= order; ++n) CHECK(s2.egf_coeff(n) == y2(n, k, lam));
            }
            const auto sa = array_poly_series(k, Rational(2, 7), lam, order);
            for (unsigned n = 0; n <= order; ++n)
                CHECK(sa.egf_coeff(n) == array_poly(n, k, Rational(2, 7), lam));
        }
        const auto st = central_T_series(k, 2 * 6);
        for (unsigned n = 0; n <= 6; ++n) CHECK(st.egf_coeff(2 * n) == central_T(n, k));
    }
    // y3 over a specific rational triple, all n <= 10, k <= 5
    const Rational lam(3, 5), a(2), b(-1, 2);
    for (unsigned k = 0; k <= 5; ++k) {
        const auto s3 = y3_series(k, lam, a, b, order);
        for (unsigned n = 0; n <= order; ++n) CHECK(s3.egf_coeff(n) == y3(n, k, lam, a, b));
    }
    // the k = 1 oracle reproduces a^n lambda + b^n
    const auto s31 = y3_series(1, lam, a, b, order);
    for (unsigned n = 0; n <= order; ++n)
        CHECK(s31.egf_coeff(n) == int_pow(a, n) * lam + int_pow(b, n));
    CHECK(y3_series(2, Rational(1), a, b, 4).egf_coeff(0) == Rational(2));
}
