#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace grat {

/// Sign-magnitude arbitrary-precision integer.
///
/// Limbs are base 2^32, little-endian, with no trailing zero limbs.
/// Zero is the empty limb vector and is always non-negative.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);

    /// Parses an optionally signed decimal string. Throws std::invalid_argument.
    static BigInt from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    /// -1, 0 or +1.
    int signum() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);
    BigInt& operator%=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
    friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

    /// Truncated division: q rounds toward zero, r has the sign of the dividend,
    /// a == q*b + r and |r| < |b|. Throws std::domain_error on b == 0.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    friend bool operator==(const BigInt& lhs, const BigInt& rhs);
    friend std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs);

    std::string to_decimal() const;
    double to_double() const;

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws std::overflow_error if it does not fit

    /// Number of significant bits of |*this|; 0 for zero.
    std::size_t bit_length() const;
    bool is_even() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    using Limb = std::uint32_t;
    using Mag = std::vector<Limb>;

    bool negative_ = false;
    Mag limbs_;

    void trim();
    static int mag_cmp(const Mag& a, const Mag& b);
    static Mag mag_add(const Mag& a, const Mag& b);
    static Mag mag_sub(const Mag& a, const Mag& b);  // requires a >= b
    static Mag mag_mul(const Mag& a, const Mag& b);
    static Mag mag_mul_small(const Mag& a, Limb m);
    static Mag mag_shl(const Mag& a, unsigned bits);
    static Mag mag_shr(const Mag& a, unsigned bits);
    static void mag_divmod(const Mag& a, const Mag& b, Mag& q, Mag& r);
};

BigInt gcd(BigInt a, BigInt b);
BigInt pow(BigInt base, unsigned exp);

struct ISqrtResult {
    BigInt root;
    bool exact = false;
};

/// Floor square root by Newton iteration on integers; no floating intermediates.
/// Throws std::domain_error for negative input.
ISqrtResult integer_sqrt(const BigInt& x);

}  // namespace grat
