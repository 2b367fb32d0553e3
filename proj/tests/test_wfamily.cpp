#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/euler.hpp"
#include "eulerkind/families.hpp"
#include "eulerkind/wfamily.hpp"

using namespace eulerkind;

namespace {

const std::vector<Rational> kLambdas = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 5),
                                        Rational(-2)};
const std::vector<Rational> kSixPoints = {Rational(1),   Rational(2), Rational(1, 2),
                                          Rational(3, 5), Rational(-2), Rational(7)};

Rational w0_closed(const Rational& L) { return L / int_pow(L + Rational(1), 2); }
Rational w1_closed(const Rational& L) {
    return -(L * (L - Rational(1))) / int_pow(L + Rational(1), 3);
}
// corrected closed forms; the stated -2 lambda^2/(lambda+1)^4 and
// 4 lambda (1-lambda)(lambda^2-lambda+1)/(lambda+1)^5 agree only at lambda = 1
Rational w2_closed(const Rational& L) {
    return L * (L * L - Rational(4) * L + Rational(1)) / int_pow(L + Rational(1), 4);
}
Rational w3_closed(const Rational& L) {
    return L * (Rational(1) - L) * (L * L - Rational(10) * L + Rational(1)) /
           int_pow(L + Rational(1), 5);
}
Rational w2_stated(const Rational& L) {
    return -(Rational(2) * L * L) / int_pow(L + Rational(1), 4);
}
Rational w3_stated(const Rational& L) {
    return Rational(4) * L * (Rational(1) - L) * (L * L - L + Rational(1)) /
           int_pow(L + Rational(1), 5);
}

} // namespace

TEST_CASE("closed forms at six rational points") {
    for (const auto& L : kSixPoints) {
        CHECK(w_n(0, L) == w0_closed(L));
        CHECK(w_n(1, L) == w1_closed(L));
        CHECK(w_n(2, L) == w2_closed(L));
        CHECK(w_n(3, L) == w3_closed(L));
        // the stated W2/W3 forms hold only at lambda = 1
        CHECK((w_n(2, L) == w2_stated(L)) == (L == Rational(1)));
        CHECK((w_n(3, L) == w3_stated(L)) == (L == Rational(1)));
    }
    CHECK(w_n(2, Rational(1)) == Rational(-1, 8));
}

TEST_CASE("pole guards") {
    CHECK_THROWS_AS(w_n(1, Rational(0)), ZeroLambdaError);
    CHECK_THROWS_AS(w_n(1, Rational(-1)), LambdaMinusOneError);
    CHECK_THROWS_AS(w_series(Rational(0), 4), ZeroLambdaError);
    CHECK_THROWS_AS(w_series(Rational(-1), 4), ZeroConstantTermError);
}

TEST_CASE("recurrence agrees with the series oracle") {
    for (const auto& L : kLambdas) {
        const auto s = w_series(L, 12);
        for (unsigned n = 0; n <= 12; ++n) CHECK(s.egf_coeff(n) == w_n(n, L));
    }
    const auto s1 = w_series(Rational(1), 4);
    CHECK(s1.coeff(0) == Rational(1, 4));
    CHECK(s1.egf_coeff(1) == Rational(0));
    // deep prefix exercises multi-word numerators and denominators
    const auto deep = w_series(Rational(3, 5), 25);
    WSequence seq(Rational(3, 5));
    for (unsigned n = 0; n <= 25; ++n) CHECK(seq.at(n) == deep.egf_coeff(n));
    CHECK(seq.at(25).to_string().size() > 40);
}

TEST_CASE("memoized prefix is stable under extension") {
    WSequence seq(Rational(3, 5));
    const Rational w2_first = seq.at(2);
    seq.at(9);
    CHECK(seq.at(2) == w2_first);
    CHECK(seq.at(0) == w0_closed(Rational(3, 5)));
}

TEST_CASE("w_order_k") {
    for (const auto& L : kLambdas)
        for (unsigned n = 0; n <= 10; ++n) CHECK(w_order_k(n, 1, L) == w_n(n, L));
    CHECK(w_order_k(0, 2, Rational(1)) == Rational(1, 16));
    CHECK(w_order_k(0, 0, Rational(2)) == Rational(1));
    for (unsigned n = 1; n <= 6; ++n) CHECK(w_order_k(n, 0, Rational(2)) == Rational(0));
}

TEST_CASE("w_neg_k equals the direct positive power") {
    for (const auto& L : kLambdas) {
        CHECK(w_neg_k(0, 1, L) == L + Rational(2) + L.reciprocal());
        CHECK(w_neg_k(1, 1, L) == L - L.reciprocal());
        CHECK(w_neg_k(2, 1, L) == L + L.reciprocal());
    }
    // (2k)! y2 equals the EGF coefficients of (lambda e^t + 1/lambda e^-t + 2)^k
    for (unsigned k = 0; k <= 5; ++k)
        for (const auto& L : kLambdas) {
            const auto direct = y2_series(k, L, 10) * Rational(factorial(2 * k));
            for (unsigned n = 0; n <= 10; ++n) CHECK(direct.egf_coeff(n) == w_neg_k(n, k, L));
        }
    // lambda = -1 is fine for positive powers
    CHECK(w_neg_k(0, 1, Rational(-1)) == Rational(0));
    CHECK(w_neg_k(1, 1, Rational(-1)) == Rational(0));
    CHECK(w_neg_k(2, 1, Rational(-1)) == Rational(-2));
}

TEST_CASE("w_poly") {
    for (const auto& L : kLambdas)
        for (unsigned n = 0; n <= 8; ++n)
            for (unsigned k = 0; k <= 3; ++k)
                CHECK(w_poly(n, k, Rational(0), L) == w_order_k(n, k, L));
    CHECK(w_poly(1, 1, Rational(1), Rational(1)) == Rational(1, 4));
    // shift law: W_n^(k)(x+y) = sum_m C(n,m) y^(n-m) W_m^(k)(x)
    const Rational x(2, 7), y(1, 3), L(3, 5);
    for (unsigned k = 0; k <= 3; ++k)
        for (unsigned n = 0; n <= 8; ++n) {
            Rational rhs;
            for (unsigned m = 0; m <= n; ++m)
                rhs += Rational(binomial(n, m)) * int_pow(y, n - m) * w_poly(m, k, x, L);
            CHECK(w_poly(n, k, x + y, L) == rhs);
        }
}

TEST_CASE("link to order-2 first-kind polynomials at x = 1") {
    for (const auto& L : kLambdas)
        for (unsigned n = 0; n <= 10; ++n)
            CHECK(w_n(n, L) == L / Rational(4) * euler1_pos_poly(n, 2, Rational(1), L));
}

TEST_CASE("annihilation against y2") {
    for (const auto& L : kLambdas)
        for (unsigned k = 0; k <= 4; ++k)
            for (unsigned n = 0; n <= 10; ++n) {
                Rational acc;
                for (unsigned m = 0; m <= n; ++m)
                    acc += Rational(binomial(n, m)) * w_order_k(n - m, k, L) * y2(m, k, L);
                CHECK(acc == (n == 0 ? Rational(factorial(2 * k)).reciprocal() : Rational(0)));
            }
}
