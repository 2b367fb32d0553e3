#include "eulerkind/euler.hpp"

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/families.hpp"

namespace eulerkind {

Rational euler1_neg(unsigned n, unsigned k, const Rational& lambda) {
    return Rational(factorial(k)) * int_pow(Rational(1, 2), k) * y1(n, k, lambda);
}

TruncatedSeries euler1_neg_series(unsigned k, const Rational& lambda, std::size_t order) {
    TruncatedSeries base = (lambda * TruncatedSeries::exp_linear(Rational(1), order) +
                            TruncatedSeries::constant(Rational(1), order)) *
                           Rational(1, 2);
    return base.pow(k);
}

TruncatedSeries euler1_pos_series(unsigned k, const Rational& x, const Rational& lambda,
                                  std::size_t order) {
    if (lambda == Rational(-1)) throw PoleLambdaError();
    TruncatedSeries base = (lambda * TruncatedSeries::exp_linear(Rational(1), order) +
                            TruncatedSeries::constant(Rational(1), order)) *
                           Rational(1, 2);
    return base.reciprocal().pow(k) * TruncatedSeries::exp_linear(x, order);
}

Rational euler1_pos_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda) {
    return euler1_pos_series(k, x, lambda, n).egf_coeff(n);
}

Rational euler2_neg_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda) {
    if (lambda.is_zero()) throw ZeroLambdaError();
    if (k == 0) return int_pow(x, n); // (x+-k)/2k undefined; order 0 is plainly e^{tx}
    const Rational kk{Int(k)};
    const Rational a = (x + kk) / (Rational(2) * kk);
    const Rational b = (x - kk) / (Rational(2) * kk);
    const Rational scale = Rational(factorial(k)) * int_pow(Rational(2), n) *
                           int_pow(Rational(1, 2), k) * int_pow(lambda.reciprocal(), k);
    return scale * y3(n, k, lambda * lambda, a, b);
}

Rational euler2_neg_num(unsigned n, unsigned k, const Rational& lambda) {
    return euler2_neg_poly(n, k, Rational(0), lambda);
}

TruncatedSeries euler2_neg_series(unsigned k, const Rational& lambda, std::size_t order) {
    if (lambda.is_zero()) throw ZeroLambdaError();
    TruncatedSeries base = (lambda * TruncatedSeries::exp_linear(Rational(1), order) +
                            lambda.reciprocal() * TruncatedSeries::exp_linear(Rational(-1), order)) *
                           Rational(1, 2);
    return base.pow(k);
}

TruncatedSeries euler2_pos_series(unsigned k, const Rational& x, const Rational& lambda,
                                  std::size_t order) {
    if (lambda.is_zero()) throw ZeroLambdaError();
    TruncatedSeries base = (lambda * TruncatedSeries::exp_linear(Rational(1), order) +
                            lambda.reciprocal() * TruncatedSeries::exp_linear(Rational(-1), order)) *
                           Rational(1, 2);
    return base.reciprocal().pow(k) * TruncatedSeries::exp_linear(x, order);
}

Rational euler2_pos_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda) {
    return euler2_pos_series(k, x, lambda, n).egf_coeff(n);
}

NumberTable euler_table(const EulerTableSpec& spec) {
    if (spec.n_max < spec.n_min || spec.k_max < spec.k_min || spec.n_min < 0 || spec.k_min < 0)
        throw IndexOutOfRangeError("table ranges must be nonempty and nonnegative");
    NumberTable t;
    t.family = spec.kind == EulerTableSpec::Kind::First ? "E1neg" : "E2neg";
    t.params.emplace_back("lambda", spec.lambda.to_string());
    t.n_min = spec.n_min;
    t.n_max = spec.n_max;
    t.k_min = spec.k_min;
    t.k_max = spec.k_max;
    for (long n = spec.n_min; n <= spec.n_max; ++n) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(spec.k_max - spec.k_min + 1));
        for (long k = spec.k_min; k <= spec.k_max; ++k) {
            const unsigned un = static_cast<unsigned>(n);
            const unsigned uk = static_cast<unsigned>(k);
            row.push_back(spec.kind == EulerTableSpec::Kind::First
                              ? euler1_neg(un, uk, spec.lambda)
                              : euler2_neg_num(un, uk, spec.lambda));
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

} // namespace eulerkind
