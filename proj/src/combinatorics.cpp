#include "eulerkind/combinatorics.hpp"

namespace eulerkind {

Int binomial(unsigned long n, long long k) {
    if (k < 0 || static_cast<unsigned long long>(k) > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational int_pow(const Rational& base, unsigned long exp) {
    if (exp == 0) return Rational(1);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exp);
    // num/den coprime implies num^e/den^e coprime; the ctor still normalizes.
    return Rational(std::move(n), std::move(d));
}

} // namespace eulerkind
