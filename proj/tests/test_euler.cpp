#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/euler.hpp"
#include "eulerkind/families.hpp"

using namespace eulerkind;

namespace {
const std::vector<Rational> kLambdas = {Rational(1), Rational(2), Rational(1, 2), Rational(3, 5)};
}

TEST_CASE("first-kind negative order values") {
    CHECK(euler1_neg(4, 3, Rational(1)) == Rational(33, 2));
    CHECK(euler1_neg(6, 2, Rational(1)) == Rational(33, 2));
    for (unsigned k = 1; k <= 9; ++k)
        CHECK(euler1_neg(1, k, Rational(1)) == Rational(Int(k)) / Rational(2));
}

TEST_CASE("first-kind negative order matches its direct expansion") {
    for (unsigned k = 0; k <= 6; ++k)
        for (const auto& lam : kLambdas) {
            const auto s = euler1_neg_series(k, lam, 12);
            for (unsigned n = 0; n <= 12; ++n) CHECK(s.egf_coeff(n) == euler1_neg(n, k, lam));
        }
}

TEST_CASE("first-kind positive order polynomials") {
    for (unsigned n = 0; n <= 6; ++n)
        CHECK(euler1_pos_poly(n, 0, Rational(2, 7), Rational(3, 5)) == int_pow(Rational(2, 7), n));
    CHECK(euler1_pos_poly(0, 1, Rational(0), Rational(1)) == Rational(1));
    CHECK(euler1_pos_poly(1, 1, Rational(0), Rational(1)) == Rational(-1, 2));
    CHECK_THROWS_AS(euler1_pos_poly(1, 1, Rational(0), Rational(-1)), PoleLambdaError);
}

TEST_CASE("second-kind negative order polynomials") {
    for (unsigned n = 0; n <= 6; ++n)
        for (const auto& lam : kLambdas)
            CHECK(euler2_neg_poly(n, 0, Rational(2, 7), lam) == int_pow(Rational(2, 7), n));
    for (unsigned n = 0; n <= 8; ++n)
        for (const auto& lam : kLambdas) {
            const Rational x(2, 7);
            CHECK(euler2_neg_poly(n, 1, x, lam) ==
                  (int_pow(x + Rational(1), n) * lam +
                   int_pow(x - Rational(1), n) * lam.reciprocal()) /
                      Rational(2));
            CHECK(euler2_neg_poly(n, 2, x, Rational(1)) ==
                  (int_pow(x + Rational(2), n) + Rational(2) * int_pow(x, n) +
                   int_pow(x - Rational(2), n)) /
                      Rational(4));
        }
    CHECK_THROWS_AS(euler2_neg_poly(1, 1, Rational(0), Rational(0)), ZeroLambdaError);
}

TEST_CASE("second-kind negative order numbers") {
    CHECK(euler2_neg_num(4, 2, Rational(1)) == Rational(8));
    CHECK(euler2_neg_num(6, 3, Rational(1)) == Rational(183));
    for (unsigned m = 0; m <= 5; ++m)
        for (unsigned k = 0; k <= 9; ++k)
            CHECK(euler2_neg_num(2 * m + 1, k, Rational(1)) == Rational(0));
    // row 2 grows linearly in the order
    for (unsigned k = 0; k <= 9; ++k) CHECK(euler2_neg_num(2, k, Rational(1)) == Rational(Int(k)));
}

TEST_CASE("second-kind series oracle") {
    CHECK(euler2_neg_series(0, Rational(3, 5), 6) == TruncatedSeries::constant(Rational(1), 6));
    for (unsigned k = 0; k <= 6; ++k) {
        const auto s = euler2_neg_series(k, Rational(1), 12);
        if (k >= 1) CHECK(s.egf_coeff(2) == Rational(Int(k)));
        CHECK(s.egf_coeff(4) ==
              Rational(3) * Rational(Int(k)) * Rational(Int(k)) - Rational(2) * Rational(Int(k)));
        // even function of t at lambda = 1
        for (unsigned n = 1; n <= 11; n += 2) CHECK(s.coeff(n) == Rational(0));
    }
    for (unsigned k = 0; k <= 9; ++k) {
        const auto s = euler2_neg_series(k, Rational(1), 12);
        for (unsigned n = 1; n <= 12; n += 2) CHECK(s.coeff(n) == Rational(0));
    }
    // dual-method equivalence across lambda
    for (unsigned k = 0; k <= 6; ++k)
        for (const auto& lam : kLambdas) {
            const auto s = euler2_neg_series(k, lam, 12);
            for (unsigned n = 0; n <= 12; ++n) CHECK(s.egf_coeff(n) == euler2_neg_num(n, k, lam));
        }
}

TEST_CASE("second-kind positive order polynomials") {
    CHECK(euler2_pos_poly(0, 1, Rational(0), Rational(1)) == Rational(1));
    CHECK(euler2_pos_poly(2, 1, Rational(0), Rational(1)) == Rational(-1));
    // classical bridge: E*_n = 2^n E_n(1/2)
    for (unsigned n = 0; n <= 10; ++n)
        CHECK(euler2_pos_poly(n, 1, Rational(0), Rational(1)) ==
              int_pow(Rational(2), n) * euler1_pos_poly(n, 1, Rational(1, 2), Rational(1)));
}

TEST_CASE("euler_table assembly") {
    EulerTableSpec spec;
    spec.kind = EulerTableSpec::Kind::Second;
    spec.n_min = 2;
    spec.n_max = 2;
    spec.k_min = 2;
    spec.k_max = 2;
    const auto t = euler_table(spec);
    CHECK(t.cells.size() == 1);
    CHECK(t.cells[0].size() == 1);
    CHECK(t.at(2, 2) == Rational(2));

    EulerTableSpec first;
    first.kind = EulerTableSpec::Kind::First;
    first.n_max = 8;
    first.k_max = 9;
    const auto ft = euler_table(first);
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= 9; ++k)
            CHECK(ft.at(n, k) ==
                  euler1_neg(static_cast<unsigned>(n), static_cast<unsigned>(k), Rational(1)));
    // odd rows of the second-kind grid vanish
    EulerTableSpec second;
    second.kind = EulerTableSpec::Kind::Second;
    second.n_max = 9;
    second.k_max = 9;
    const auto st = euler_table(second);
    for (long n = 1; n <= 9; n += 2)
        for (long k = 0; k <= 9; ++k) CHECK(st.at(n, k) == Rational(0));
}
