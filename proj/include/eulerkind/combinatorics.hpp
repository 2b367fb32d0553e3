#pragma once

#include "eulerkind/rational.hpp"

namespace eulerkind {

/// C(n,k); 0 when k < 0 or k > n, C(n,0) = 1.
Int binomial(unsigned long n, long long k);

Int factorial(unsigned long n);

/// base^exp with the 0^0 = 1 convention. Negative exponents are rejected at
/// the type level; invert explicitly via Rational::reciprocal().
Rational int_pow(const Rational& base, unsigned long exp);

inline Int sign_pow(unsigned long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

} // namespace eulerkind
