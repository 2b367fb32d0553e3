#pragma once

#include <vector>

#include "eulerkind/rational.hpp"
#include "eulerkind/series.hpp"

namespace eulerkind {

/// Memoized prefix W_0..W_n of the W sequence for one lambda (not 0 or -1).
/// The recurrence is triangular, so extending never changes earlier entries.
class WSequence {
public:
    explicit WSequence(Rational lambda);

    const Rational& lambda() const { return lambda_; }
    /// W_n(lambda), extending the computed prefix as needed.
    const Rational& at(unsigned n);

private:
    Rational lambda_;
    Rational inv_head_; // -lambda/(lambda+1)^2, the solved-step multiplier
    std::vector<Rational> computed_;
};

/// W_n(lambda) solved from the defining recurrence, seeded with
/// W_0 = lambda/(lambda+1)^2.
Rational w_n(unsigned n, const Rational& lambda);

/// Series reciprocal of lambda e^t + lambda^{-1} e^{-t} + 2; its EGF
/// coefficients must equal w_n.
TruncatedSeries w_series(const Rational& lambda, std::size_t order);

/// W_n^{(k)}(lambda): EGF coefficient of the k-th reciprocal power.
Rational w_order_k(unsigned n, unsigned k, const Rational& lambda);
TruncatedSeries w_order_k_series(unsigned k, const Rational& lambda, std::size_t order);

/// W_n^{(-k)}(lambda) = (2k)! y2(n,k;lambda). lambda = -1 is allowed here.
Rational w_neg_k(unsigned n, unsigned k, const Rational& lambda);

/// W_n^{(k)}(x;lambda) = sum_m C(n,m) x^{n-m} W_m^{(k)}(lambda).
Rational w_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda);

} // namespace eulerkind
