#include "eulerkind/series.hpp"

#include "eulerkind/combinatorics.hpp"

namespace eulerkind {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.resize(1);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::exp_linear(const Rational& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Rational(1);
    for (std::size_t n = 1; n <= order; ++n)
        s.coeffs_[n] = s.coeffs_[n - 1] * c / Rational(Int(static_cast<long>(n)));
    return s;
}

Rational TruncatedSeries::egf_coeff(std::size_t n) const {
    if (n > order()) throw IndexBeyondOrderError();
    return coeffs_[n] * Rational(factorial(n));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    if (new_order > order()) throw IndexBeyondOrderError();
    TruncatedSeries s(new_order);
    for (std::size_t n = 0; n <= new_order; ++n) s.coeffs_[n] = coeffs_[n];
    return s;
}

TruncatedSeries TruncatedSeries::pow(unsigned long k) const {
    TruncatedSeries acc = constant(Rational(1), order());
    for (unsigned long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0].is_zero()) throw ZeroConstantTermError();
    TruncatedSeries r(order());
    const Rational inv0 = coeffs_[0].reciprocal();
    r.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
        Rational acc;
        for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * r.coeffs_[n - i];
        r.coeffs_[n] = -acc * inv0;
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(*this);
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (order() != o.order()) throw OrderMismatchError();
    for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (order() != o.order()) throw OrderMismatchError();
    for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw OrderMismatchError();
    TruncatedSeries p(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) {
        Rational acc;
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero() || b.coeffs_[n - i].is_zero()) continue;
            acc += a.coeffs_[i] * b.coeffs_[n - i];
        }
        p.coeffs_[n] = std::move(acc);
    }
    return p;
}

} // namespace eulerkind
