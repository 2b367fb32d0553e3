#pragma once

#include <cstddef>
#include <vector>

#include "eulerkind/rational.hpp"

namespace eulerkind {

/// Truncated formal power series in t over Rational. coeff(n) is the ordinary
/// coefficient of t^n; EGF extraction multiplies by n! exactly once, in
/// egf_coeff. Binary operations require equal order (truncate explicitly).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, std::size_t order);
    /// Expansion of e^{ct}: coefficients c^n/n!.
    static TruncatedSeries exp_linear(const Rational& c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t n) const { return coeffs_[n]; }
    Rational& coeff(std::size_t n) { return coeffs_[n]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// coeff(n) * n!; throws IndexBeyondOrderError past the truncation order.
    Rational egf_coeff(std::size_t n) const;

    TruncatedSeries truncated(std::size_t new_order) const;

    TruncatedSeries pow(unsigned long k) const;
    /// Multiplicative inverse to the same order; requires coeff(0) != 0.
    TruncatedSeries reciprocal() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }
    /// Truncated Cauchy product.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

} // namespace eulerkind
