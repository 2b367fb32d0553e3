#pragma once

#include "eulerkind/rational.hpp"
#include "eulerkind/series.hpp"
#include "eulerkind/table.hpp"

namespace eulerkind {

/// First-kind Apostol-Euler numbers of order -k: k! 2^{-k} y1(n,k;lambda).
Rational euler1_neg(unsigned n, unsigned k, const Rational& lambda);

/// Direct expansion of ((lambda e^t + 1)/2)^k.
TruncatedSeries euler1_neg_series(unsigned k, const Rational& lambda, std::size_t order);

/// First-kind Apostol-Euler polynomials E_n^{(k)}(x;lambda) of positive order,
/// extracted from (2/(lambda e^t + 1))^k e^{tx}. lambda = -1 is a pole.
Rational euler1_pos_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda);
TruncatedSeries euler1_pos_series(unsigned k, const Rational& x, const Rational& lambda,
                                  std::size_t order);

/// Second-kind Apostol-type Euler polynomials of order -k, computed from
/// k! 2^{n-k} lambda^{-k} y3(n,k;lambda^2;(x+k)/2k,(x-k)/2k); k = 0 gives x^n.
Rational euler2_neg_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda);

/// euler2_neg_poly at x = 0.
Rational euler2_neg_num(unsigned n, unsigned k, const Rational& lambda);

/// Direct expansion of ((lambda e^t + lambda^{-1} e^{-t})/2)^k, the
/// independent cross-check of euler2_neg_num.
TruncatedSeries euler2_neg_series(unsigned k, const Rational& lambda, std::size_t order);

/// Second-kind Apostol-type Euler polynomials of positive order k, extracted
/// from (2/(lambda e^t + lambda^{-1} e^{-t}))^k e^{tx}.
Rational euler2_pos_poly(unsigned n, unsigned k, const Rational& x, const Rational& lambda);
TruncatedSeries euler2_pos_series(unsigned k, const Rational& x, const Rational& lambda,
                                  std::size_t order);

struct EulerTableSpec {
    enum class Kind { First, Second };
    Kind kind = Kind::First;
    long n_min = 0, n_max = 0;
    long k_min = 0, k_max = 0; // order -k columns
    Rational lambda{1};
};

/// Grid of euler1_neg / euler2_neg_num values, rows n ascending, columns k
/// ascending (printed with negative-order labels).
NumberTable euler_table(const EulerTableSpec& spec);

} // namespace eulerkind
