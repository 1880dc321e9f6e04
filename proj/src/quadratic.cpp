#include "grat/quadratic.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace grat {

QuadraticNumber::QuadraticNumber(BigInt radicand, Rational p, Rational q)
    : radicand_(std::move(radicand)), p_(std::move(p)), q_(std::move(q)) {
    if (radicand_.is_negative())
        throw std::domain_error("QuadraticNumber: negative radicand");
}

void QuadraticNumber::check_same_radicand(const QuadraticNumber& rhs) const {
    if (radicand_ != rhs.radicand_)
        throw std::domain_error("QuadraticNumber: radicand mismatch (" +
                                radicand_.to_decimal() + " vs " +
                                rhs.radicand_.to_decimal() + ")");
}

QuadraticNumber QuadraticNumber::operator-() const {
    return QuadraticNumber(radicand_, -p_, -q_);
}

QuadraticNumber QuadraticNumber::conjugate() const {
    return QuadraticNumber(radicand_, p_, -q_);
}

Rational QuadraticNumber::norm() const {
    return p_ * p_ - Rational(radicand_) * q_ * q_;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& rhs) {
    check_same_radicand(rhs);
    p_ += rhs.p_;
    q_ += rhs.q_;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& rhs) {
    check_same_radicand(rhs);
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& rhs) {
    check_same_radicand(rhs);
    // (p1 + q1*s)(p2 + q2*s) = p1*p2 + n*q1*q2 + (p1*q2 + q1*p2)*s
    Rational p = p_ * rhs.p_ + Rational(radicand_) * q_ * rhs.q_;
    Rational q = p_ * rhs.q_ + q_ * rhs.p_;
    p_ = std::move(p);
    q_ = std::move(q);
    return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& rhs) {
    check_same_radicand(rhs);
    if (rhs.is_zero()) throw std::domain_error("QuadraticNumber: division by zero");
    Rational nrm = rhs.norm();
    if (nrm.is_zero())
        throw std::domain_error(
            "QuadraticNumber: division by zero-norm element (radicand is a perfect square)");
    QuadraticNumber conj = rhs.conjugate();
    *this *= conj;
    p_ /= nrm;
    q_ /= nrm;
    return *this;
}

bool operator==(const QuadraticNumber& lhs, const QuadraticNumber& rhs) {
    return lhs.radicand_ == rhs.radicand_ && lhs.p_ == rhs.p_ && lhs.q_ == rhs.q_;
}

std::string QuadraticNumber::to_string() const {
    return p_.to_string() + " + (" + q_.to_string() + ")*sqrt(" +
           radicand_.to_decimal() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadraticNumber& v) {
    return os << v.to_string();
}

}  // namespace grat
