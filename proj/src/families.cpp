#include "eulerkind/families.hpp"

#include "eulerkind/combinatorics.hpp"

namespace eulerkind {

Rational pow_signed(const Rational& base, long long e) {
    if (e >= 0) return int_pow(base, static_cast<unsigned long>(e));
    return int_pow(base.reciprocal(), static_cast<unsigned long>(-e));
}

Rational y1(unsigned n, unsigned k, const Rational& lambda) {
    Rational acc;
    for (unsigned j = 0; j <= k; ++j)
        acc += Rational(binomial(k, j)) * int_pow(Rational(Int(j)), n) * int_pow(lambda, j);
    return acc / Rational(factorial(k));
}

Rational big_B(unsigned n, unsigned k) { return Rational(factorial(k)) * y1(n, k, Rational(1)); }

Rational y2(unsigned n, unsigned k, const Rational& lambda) {
    if (lambda.is_zero()) throw ZeroLambdaError();
    Rational acc;
    for (unsigned j = 0; j <= k; ++j) {
        Rational inner;
        for (unsigned l = 0; l <= j; ++l) {
            const long long d = 2LL * l - j;
            inner += Rational(binomial(j, l)) * int_pow(Rational(static_cast<long>(d)), n) *
                     pow_signed(lambda, d);
        }
        acc += Rational(binomial(k, j)) * int_pow(Rational(2), k - j) * inner;
    }
    return acc / Rational(factorial(2 * k));
}

Rational y3(unsigned n, unsigned k, const Rational& lambda, const Rational& a, const Rational& b) {
    Rational acc;
    for (unsigned j = 0; j <= k; ++j) {
        const Rational base = b * Rational(Int(k)) + Rational(Int(j)) * (a - b);
        acc += Rational(binomial(k, j)) * int_pow(lambda, j) * int_pow(base, n);
    }
    return acc / Rational(factorial(k));
}

Rational stirling2(unsigned n, long long k) {
    if (k < 0 || static_cast<unsigned long long>(k) > n) return Rational(0);
    const unsigned v = static_cast<unsigned>(k);
    Rational acc;
    for (unsigned j = 0; j <= v; ++j)
        acc += Rational(sign_pow(j) * binomial(v, j)) * int_pow(Rational(Int(v - j)), n);
    return acc / Rational(factorial(v));
}

Rational lambda_stirling2(unsigned n, unsigned v, const Rational& lambda) {
    Rational acc;
    for (unsigned j = 0; j <= v; ++j)
        acc += Rational(sign_pow(v - j) * binomial(v, j)) * int_pow(lambda, j) *
               int_pow(Rational(Int(j)), n);
    return acc / Rational(factorial(v));
}

Rational array_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda) {
    Rational acc;
    for (unsigned j = 0; j <= k; ++j)
        acc += Rational(sign_pow(k - j) * binomial(k, j)) * int_pow(lambda, j) *
               int_pow(x + Rational(Int(j)), n);
    return acc / Rational(factorial(k));
}

Rational central_T(unsigned n, unsigned k) {
    Rational acc;
    for (unsigned j = 0; j <= 2 * k; ++j) {
        const long base = static_cast<long>(k) - static_cast<long>(j);
        acc += Rational(sign_pow(j) * binomial(2 * k, j)) * int_pow(Rational(base), 2 * n);
    }
    return acc / Rational(factorial(2 * k));
}

Rational bernstein(unsigned m, unsigned n, const Rational& x) {
    if (m > n) throw IndexOutOfRangeError("bernstein index m exceeds degree n");
    return Rational(binomial(n, m)) * int_pow(x, m) * int_pow(Rational(1) - x, n - m);
}

TruncatedSeries y1_series(unsigned k, const Rational& lambda, std::size_t order) {
    TruncatedSeries base = lambda * TruncatedSeries::exp_linear(Rational(1), order) +
                           TruncatedSeries::constant(Rational(1), order);
    return base.pow(k) * Rational(factorial(k)).reciprocal();
}

TruncatedSeries y2_series(unsigned k, const Rational& lambda, std::size_t order) {
    if (lambda.is_zero()) throw ZeroLambdaError();
    TruncatedSeries base = lambda * TruncatedSeries::exp_linear(Rational(1), order) +
                           lambda.reciprocal() * TruncatedSeries::exp_linear(Rational(-1), order) +
                           TruncatedSeries::constant(Rational(2), order);
    return base.pow(k) * Rational(factorial(2 * k)).reciprocal();
}

TruncatedSeries y3_series(unsigned k, const Rational& lambda, const Rational& a, const Rational& b,
                          std::size_t order) {
    TruncatedSeries base = lambda * TruncatedSeries::exp_linear(a - b, order) +
                           TruncatedSeries::constant(Rational(1), order);
    return TruncatedSeries::exp_linear(b * Rational(Int(k)), order) * base.pow(k) *
           Rational(factorial(k)).reciprocal();
}

TruncatedSeries lambda_stirling2_series(unsigned v, const Rational& lambda, std::size_t order) {
    TruncatedSeries base = lambda * TruncatedSeries::exp_linear(Rational(1), order) -
                           TruncatedSeries::constant(Rational(1), order);
    return base.pow(v) * Rational(factorial(v)).reciprocal();
}

TruncatedSeries array_poly_series(unsigned k, const Rational& x, const Rational& lambda,
                                  std::size_t order) {
    TruncatedSeries base = lambda * TruncatedSeries::exp_linear(Rational(1), order) -
                           TruncatedSeries::constant(Rational(1), order);
    return TruncatedSeries::exp_linear(x, order) * base.pow(k) * Rational(factorial(k)).reciprocal();
}

TruncatedSeries central_T_series(unsigned k, std::size_t order) {
    TruncatedSeries base = TruncatedSeries::exp_linear(Rational(1), order) +
                           TruncatedSeries::exp_linear(Rational(-1), order) -
                           TruncatedSeries::constant(Rational(2), order);
    return base.pow(k) * Rational(factorial(2 * k)).reciprocal();
}

} // namespace eulerkind
