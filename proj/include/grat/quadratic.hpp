#pragma once

#include <cmath>
#include <iosfwd>
#include <string>

#include "grat/rational.hpp"

namespace grat {

/// Exact element p + q*sqrt(n) of the quadratic extension by a fixed
/// non-negative integer radicand n. The radicand is not reduced to squarefree
/// form; two values are comparable only when their radicands match, and
/// equality is componentwise.
class QuadraticNumber {
public:
    QuadraticNumber(BigInt radicand, Rational p, Rational q);

    static QuadraticNumber from_rational(BigInt radicand, Rational p) {
        return QuadraticNumber(std::move(radicand), std::move(p), Rational(0));
    }
    /// coeff * sqrt(radicand)
    static QuadraticNumber sqrt_term(BigInt radicand, Rational coeff) {
        return QuadraticNumber(std::move(radicand), Rational(0), std::move(coeff));
    }

    const BigInt& radicand() const { return radicand_; }
    const Rational& rational_part() const { return p_; }
    const Rational& radical_part() const { return q_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    QuadraticNumber operator-() const;
    QuadraticNumber conjugate() const;  // p - q*sqrt(n)
    /// Field norm p^2 - n*q^2; zero only for zero when n is not a perfect square.
    Rational norm() const;

    QuadraticNumber& operator+=(const QuadraticNumber& rhs);
    QuadraticNumber& operator-=(const QuadraticNumber& rhs);
    QuadraticNumber& operator*=(const QuadraticNumber& rhs);
    QuadraticNumber& operator/=(const QuadraticNumber& rhs);

    friend QuadraticNumber operator+(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs += rhs; }
    friend QuadraticNumber operator-(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs -= rhs; }
    friend QuadraticNumber operator*(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs *= rhs; }
    friend QuadraticNumber operator/(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs /= rhs; }

    friend bool operator==(const QuadraticNumber& lhs, const QuadraticNumber& rhs);

    std::string to_string() const;
    double to_double() const {
        return p_.to_double() + q_.to_double() * std::sqrt(radicand_.to_double());
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& v);

private:
    BigInt radicand_;
    Rational p_;
    Rational q_;

    void check_same_radicand(const QuadraticNumber& rhs) const;
};

}  // namespace grat
