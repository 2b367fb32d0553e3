#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "eulerkind/errors.hpp"

namespace eulerkind {

using Int = mpz_class;

/// Arbitrary-precision rational kept in canonical form: den > 0 and
/// gcd(|num|, den) = 1 after every operation, so equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}          // NOLINT: implicit by design
    Rational(int v) : num_(v), den_(1) {}           // NOLINT
    Rational(Int v) : num_(std::move(v)), den_(1) {}// NOLINT
    Rational(Int num, Int den);
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Parses the canonical "p/q" form ("q" omitted when 1), e.g. "33/2", "-1/8", "0".
    static Rational from_string(std::string_view text);
    std::string to_string() const;

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational reciprocal() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void normalize();

    Int num_;
    Int den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace eulerkind
