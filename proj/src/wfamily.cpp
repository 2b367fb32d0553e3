#include "eulerkind/wfamily.hpp"

#include "eulerkind/combinatorics.hpp"
#include "eulerkind/families.hpp"

namespace eulerkind {

WSequence::WSequence(Rational lambda) : lambda_(std::move(lambda)) {
    if (lambda_.is_zero()) throw ZeroLambdaError();
    if (lambda_ == Rational(-1)) throw LambdaMinusOneError();
    const Rational head = int_pow(lambda_ + Rational(1), 2); // (lambda+1)^2
    inv_head_ = -lambda_ / head;
    computed_.push_back(lambda_ / head); // W_0
}

const Rational& WSequence::at(unsigned n) {
    // Collecting the m = n terms of both sums with the standalone 2 W_n gives
    // the head coefficient 2 + lambda + 1/lambda = (lambda+1)^2/lambda, so
    // each step divides by it (multiplies by inv_head_).
    while (computed_.size() <= n) {
        const unsigned i = static_cast<unsigned>(computed_.size());
        Rational tail;
        for (unsigned m = 0; m < i; ++m) {
            const Rational c(binomial(i, m));
            tail += lambda_ * c * computed_[m];
            tail += lambda_.reciprocal() * Rational(sign_pow(i - m)) * c * computed_[m];
        }
        computed_.push_back(inv_head_ * tail);
    }
    return computed_[n];
}

Rational w_n(unsigned n, const Rational& lambda) {
    WSequence seq(lambda);
    return seq.at(n);
}

TruncatedSeries w_series(const Rational& lambda, std::size_t order) {
    if (lambda.is_zero()) throw ZeroLambdaError();
    TruncatedSeries base = lambda * TruncatedSeries::exp_linear(Rational(1), order) +
                           lambda.reciprocal() * TruncatedSeries::exp_linear(Rational(-1), order) +
                           TruncatedSeries::constant(Rational(2), order);
    return base.reciprocal(); // lambda = -1 surfaces as ZeroConstantTermError
}

TruncatedSeries w_order_k_series(unsigned k, const Rational& lambda, std::size_t order) {
    return w_series(lambda, order).pow(k);
}

Rational w_order_k(unsigned n, unsigned k, const Rational& lambda) {
    if (k == 0) return n == 0 ? Rational(1) : Rational(0);
    return w_order_k_series(k, lambda, n).egf_coeff(n);
}

Rational w_neg_k(unsigned n, unsigned k, const Rational& lambda) {
    return Rational(factorial(2 * k)) * y2(n, k, lambda);
}

Rational w_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda) {
    TruncatedSeries wk = k == 0 ? TruncatedSeries::constant(Rational(1), n)
                                : w_order_k_series(k, lambda, n);
    Rational acc;
    for (unsigned m = 0; m <= n; ++m)
        acc += Rational(binomial(n, m)) * int_pow(x, n - m) * wk.egf_coeff(m);
    return acc;
}

} // namespace eulerkind
