#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/series.hpp"

using eulerkind::Rational;
using eulerkind::TruncatedSeries;

namespace {

TruncatedSeries series_of(std::initializer_list<Rational> cs) {
    return TruncatedSeries(std::vector<Rational>(cs));
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool unit_constant = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    TruncatedSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s.coeff(n) = Rational(num(rng), den(rng));
    if (unit_constant && s.coeff(0).is_zero()) s.coeff(0) = Rational(1);
    return s;
}

} // namespace

TEST_CASE("exp_linear expansions") {
    CHECK(TruncatedSeries::exp_linear(Rational(1), 3) ==
          series_of({Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
    CHECK(TruncatedSeries::exp_linear(Rational(0), 2) ==
          series_of({Rational(1), Rational(0), Rational(0)}));
    CHECK(TruncatedSeries::exp_linear(Rational(-2), 2) ==
          series_of({Rational(1), Rational(-2), Rational(2)}));
}

TEST_CASE("cauchy products") {
    const auto e = TruncatedSeries::exp_linear(Rational(1), 4);
    const auto einv = TruncatedSeries::exp_linear(Rational(-1), 4);
    CHECK(e * einv == TruncatedSeries::constant(Rational(1), 4));
    CHECK(series_of({Rational(1), Rational(1), Rational(0)}) *
              series_of({Rational(1), Rational(-1), Rational(0)}) ==
          series_of({Rational(1), Rational(0), Rational(-1)}));
    const auto e2 = TruncatedSeries::exp_linear(Rational(1), 2);
    CHECK(e2 * e2 == series_of({Rational(1), Rational(2), Rational(2)}));
    CHECK_THROWS_AS(e * e2, eulerkind::OrderMismatchError);
}

TEST_CASE("powers") {
    const auto e = TruncatedSeries::exp_linear(Rational(1), 6);
    CHECK(e.pow(0) == TruncatedSeries::constant(Rational(1), 6));
    CHECK(e.pow(3) == TruncatedSeries::exp_linear(Rational(3), 6));
    CHECK(series_of({Rational(1), Rational(1)}).pow(2) == series_of({Rational(1), Rational(2)}));
}

TEST_CASE("reciprocal") {
    CHECK(series_of({Rational(1), Rational(1), Rational(0), Rational(0)}).reciprocal() ==
          series_of({Rational(1), Rational(-1), Rational(1), Rational(-1)}));
    CHECK(series_of({Rational(2), Rational(0)}).reciprocal() ==
          series_of({Rational(1, 2), Rational(0)}));
    // 1/(e^t + e^-t + 2) to order 2
    const auto s = TruncatedSeries::exp_linear(Rational(1), 2) +
                   TruncatedSeries::exp_linear(Rational(-1), 2) +
                   TruncatedSeries::constant(Rational(2), 2);
    CHECK(s.reciprocal() == series_of({Rational(1, 4), Rational(0), Rational(-1, 16)}));
    CHECK_THROWS_AS(series_of({Rational(0), Rational(1)}).reciprocal(),
                    eulerkind::ZeroConstantTermError);
}

TEST_CASE("egf extraction") {
    const auto e = TruncatedSeries::exp_linear(Rational(3), 8);
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(e.egf_coeff(n) == eulerkind::int_pow(Rational(3), n));
    const auto s = TruncatedSeries::exp_linear(Rational(1), 2) +
                   TruncatedSeries::exp_linear(Rational(-1), 2) +
                   TruncatedSeries::constant(Rational(2), 2);
    CHECK(s.reciprocal().egf_coeff(2) == Rational(-1, 8));
    CHECK(s.egf_coeff(0) == s.coeff(0));
    CHECK_THROWS_AS(s.egf_coeff(3), eulerkind::IndexBeyondOrderError);
}

TEST_CASE("algebraic laws on random series") {
    std::mt19937 rng(911);
    for (int i = 0; i < 60; ++i) {
        const auto a = random_series(rng, 8);
        const auto b = random_series(rng, 8);
        const auto c = random_series(rng, 8);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int i = 0; i < 40; ++i) {
        const auto s = random_series(rng, 8, /*unit_constant=*/true);
        CHECK(s.reciprocal().reciprocal() == s);
        CHECK(s * s.reciprocal() == TruncatedSeries::constant(Rational(1), 8));
        std::uniform_int_distribution<unsigned> e(0, 4);
        const unsigned j = e(rng), k = e(rng);
        CHECK(s.pow(j + k) == s.pow(j) * s.pow(k));
    }
    std::uniform_int_distribution<long> cd(-6, 6);
    for (int i = 0; i < 40; ++i) {
        const Rational c1(cd(rng), 3), c2(cd(rng), 2);
        CHECK(TruncatedSeries::exp_linear(c1 + c2, 9) ==
              TruncatedSeries::exp_linear(c1, 9) * TruncatedSeries::exp_linear(c2, 9));
    }
}
