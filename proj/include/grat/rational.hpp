#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "grat/bigint.hpp"

namespace grat {

/// Exact rational number, always stored canonically: gcd(num, den) == 1 and
/// den >= 1. Zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt integer) : num_(std::move(integer)), den_(1) {}
    Rational(long long integer) : num_(integer), den_(1) {}
    Rational(BigInt num, BigInt den);  // throws std::domain_error on den == 0

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int signum() const { return num_.signum(); }

    Rational operator-() const;
    Rational reciprocal() const;  // throws std::domain_error on zero

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "7" for integers, "7/3" otherwise.
    std::string to_string() const;
    double to_double() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace grat
