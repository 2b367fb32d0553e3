#pragma once

#include <optional>

#include "eulerkind/rational.hpp"
#include "eulerkind/series.hpp"

namespace eulerkind {

/// Parameter bundle shared by the family front ends. lambda must be nonzero
/// wherever 1/lambda appears; a != b wherever (a-b) is divided by.
struct FamilyParams {
    Rational lambda{1};
    Rational a{1};
    Rational b{0};
    Rational x{0};
};

// --- explicit closed sums -------------------------------------------------

/// y1(n,k;lambda) = (1/k!) sum_j C(k,j) j^n lambda^j, with 0^0 = 1.
Rational y1(unsigned n, unsigned k, const Rational& lambda);

/// B(n,k) = k! y1(n,k;1); integer-valued.
Rational big_B(unsigned n, unsigned k);

/// y2(n,k;lambda) = (1/(2k)!) sum_j C(k,j) 2^{k-j} sum_l C(j,l) (2l-j)^n lambda^{2l-j}.
Rational y2(unsigned n, unsigned k, const Rational& lambda);

/// y3(n,k;lambda;a,b) = (1/k!) sum_j C(k,j) lambda^j (bk + j(a-b))^n.
Rational y3(unsigned n, unsigned k, const Rational& lambda, const Rational& a, const Rational& b);

/// Classical Stirling numbers of the second kind; 0 when n < k or k < 0.
Rational stirling2(unsigned n, long long k);

/// Coefficients of (lambda e^t - 1)^v / v!.
Rational lambda_stirling2(unsigned n, unsigned v, const Rational& lambda);

/// Array polynomials S_k^n(x;lambda): coefficients of e^{tx}(lambda e^t - 1)^k / k!.
Rational array_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda);

/// Central factorial numbers of the second kind T(n,k).
Rational central_T(unsigned n, unsigned k);

/// Bernstein basis B_m^n(x) = C(n,m) x^m (1-x)^{n-m}; requires m <= n.
Rational bernstein(unsigned m, unsigned n, const Rational& x);

// --- generating-function oracles ------------------------------------------
// Each expands the defining series to the requested order; EGF coefficients
// must agree with the closed sums above (checked exhaustively in the tests).

TruncatedSeries y1_series(unsigned k, const Rational& lambda, std::size_t order);
TruncatedSeries y2_series(unsigned k, const Rational& lambda, std::size_t order);
TruncatedSeries y3_series(unsigned k, const Rational& lambda, const Rational& a, const Rational& b,
                          std::size_t order);
TruncatedSeries lambda_stirling2_series(unsigned v, const Rational& lambda, std::size_t order);
TruncatedSeries array_poly_series(unsigned k, const Rational& x, const Rational& lambda,
                                  std::size_t order);
/// (e^t + e^{-t} - 2)^k / (2k)!; T(n,k) is its EGF coefficient at 2n.
TruncatedSeries central_T_series(unsigned k, std::size_t order);

/// lambda^e for signed e, inverting explicitly for e < 0.
Rational pow_signed(const Rational& base, long long e);

} // namespace eulerkind
