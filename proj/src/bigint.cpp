#include "grat/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace grat {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    negative_ = value < 0;
    // Avoid overflow on LLONG_MIN by widening before negation.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                  : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<Limb>(mag & 0xffffffffu));
        mag >>= 32;
    }
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_decimal(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("BigInt: empty decimal string");
    BigInt out;
    while (i < text.size()) {
        std::uint32_t chunk = 0;
        std::uint32_t scale = 1;
        for (int d = 0; d < 9 && i < text.size(); ++d, ++i) {
            char c = text[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigInt: invalid digit in decimal string");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        out.limbs_ = mag_mul_small(out.limbs_, scale);
        out.limbs_ = mag_add(out.limbs_, Mag{chunk});
        out.trim();
    }
    out.negative_ = neg && !out.limbs_.empty();
    return out;
}

int BigInt::signum() const {
    if (limbs_.empty()) return 0;
    return negative_ ? -1 : 1;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::mag_cmp(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

BigInt::Mag BigInt::mag_add(const Mag& a, const Mag& b) {
    Mag out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<Limb>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<Limb>(carry));
    return out;
}

BigInt::Mag BigInt::mag_sub(const Mag& a, const Mag& b) {
    Mag out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow;
        if (i < b.size()) d -= static_cast<std::int64_t>(b[i]);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<Limb>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt::Mag BigInt::mag_mul(const Mag& a, const Mag& b) {
    if (a.empty() || b.empty()) return {};
    Mag out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] +
                                static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<Limb>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<Limb>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt::Mag BigInt::mag_mul_small(const Mag& a, Limb m) {
    if (a.empty() || m == 0) return {};
    Mag out;
    out.reserve(a.size() + 1);
    std::uint64_t carry = 0;
    for (Limb limb : a) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
        out.push_back(static_cast<Limb>(cur & 0xffffffffu));
        carry = cur >> 32;
    }
    if (carry) out.push_back(static_cast<Limb>(carry));
    return out;
}

BigInt::Mag BigInt::mag_shl(const Mag& a, unsigned bits) {
    if (a.empty()) return {};
    unsigned limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    Mag out(limb_shift, 0);
    std::uint32_t carry = 0;
    for (Limb limb : a) {
        if (bit_shift == 0) {
            out.push_back(limb);
        } else {
            out.push_back((limb << bit_shift) | carry);
            carry = static_cast<std::uint32_t>(static_cast<std::uint64_t>(limb) >> (32 - bit_shift));
        }
    }
    if (bit_shift != 0 && carry) out.push_back(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt::Mag BigInt::mag_shr(const Mag& a, unsigned bits) {
    unsigned limb_shift = bits / 32;
    unsigned bit_shift = bits % 32;
    if (limb_shift >= a.size()) return {};
    Mag out(a.begin() + limb_shift, a.end());
    if (bit_shift != 0) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::uint32_t hi = (i + 1 < out.size())
                                   ? (out[i + 1] << (32 - bit_shift))
                                   : 0;
            out[i] = (out[i] >> bit_shift) | hi;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Schoolbook long division on normalized magnitudes. Quotient limbs are
// estimated from the top 64 bits of the running remainder and fixed up with
// full-width comparisons, so the estimate only needs to be close.
void BigInt::mag_divmod(const Mag& a, const Mag& b, Mag& q, Mag& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (mag_cmp(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0];
        std::uint64_t rem = 0;
        q.assign(a.size(), 0);
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<Limb>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<Limb>(rem));
        return;
    }

    unsigned shift = static_cast<unsigned>(std::countl_zero(b.back()));
    Mag an = mag_shl(a, shift);
    Mag bn = mag_shl(b, shift);
    const std::uint64_t btop = bn.back();

    Mag rem;  // running remainder, little-endian
    Mag qrev;
    for (std::size_t i = an.size(); i-- > 0;) {
        rem.insert(rem.begin(), an[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        std::uint64_t qhat = 0;
        if (mag_cmp(rem, bn) >= 0) {
            std::uint64_t top;
            if (rem.size() > bn.size()) {
                top = (static_cast<std::uint64_t>(rem[rem.size() - 1]) << 32) |
                      rem[rem.size() - 2];
            } else {
                top = rem.back();
            }
            qhat = std::min<std::uint64_t>(top / btop, kBase - 1);
            if (qhat == 0) qhat = 1;
            Mag prod = mag_mul_small(bn, static_cast<Limb>(qhat));
            while (mag_cmp(prod, rem) > 0) {
                --qhat;
                prod = mag_mul_small(bn, static_cast<Limb>(qhat));
            }
            rem = mag_sub(rem, prod);
            while (mag_cmp(rem, bn) >= 0) {
                ++qhat;
                rem = mag_sub(rem, bn);
            }
        }
        qrev.push_back(static_cast<Limb>(qhat));
    }
    q.assign(qrev.rbegin(), qrev.rend());
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = mag_shr(rem, shift);
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        limbs_ = mag_add(limbs_, rhs.limbs_);
    } else {
        int c = mag_cmp(limbs_, rhs.limbs_);
        if (c == 0) {
            limbs_.clear();
        } else if (c > 0) {
            limbs_ = mag_sub(limbs_, rhs.limbs_);
        } else {
            limbs_ = mag_sub(rhs.limbs_, limbs_);
            negative_ = rhs.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    negative_ = negative_ != rhs.negative_;
    limbs_ = mag_mul(limbs_, rhs.limbs_);
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    Mag qm, rm;
    mag_divmod(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.negative_ = a.negative_ != b.negative_;
    q.trim();
    r.limbs_ = std::move(rm);
    r.negative_ = a.negative_;
    r.trim();
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    *this = std::move(r);
    return *this;
}

bool operator==(const BigInt& lhs, const BigInt& rhs) {
    return lhs.negative_ == rhs.negative_ && lhs.limbs_ == rhs.limbs_;
}

std::strong_ordering operator<=>(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.negative_ != rhs.negative_)
        return lhs.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = BigInt::mag_cmp(lhs.limbs_, rhs.limbs_);
    if (lhs.negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigInt::to_decimal() const {
    if (limbs_.empty()) return "0";
    Mag work = limbs_;
    std::string digits;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<Limb>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        v = v * 4294967296.0 + static_cast<double>(limbs_[i]);
    }
    return negative_ ? -v : v;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = 0;
    if (limbs_.size() >= 1) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (negative_) return mag <= (1ull << 63);
    return mag < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in int64");
    std::uint64_t mag = 0;
    if (limbs_.size() >= 1) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return negative_ ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) +
           (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool BigInt::is_even() const {
    return limbs_.empty() || (limbs_[0] & 1u) == 0;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) {
    return os << v.to_decimal();
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt pow(BigInt base, unsigned exp) {
    BigInt out = 1;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

ISqrtResult integer_sqrt(const BigInt& x) {
    if (x.is_negative()) throw std::domain_error("integer_sqrt: negative input");
    if (x.is_zero() || x == BigInt(1)) return {x, true};
    // Newton iteration from an over-estimate; strictly decreasing until fixed.
    BigInt r = pow(BigInt(2), static_cast<unsigned>((x.bit_length() + 1) / 2));
    BigInt two(2);
    for (;;) {
        BigInt next = (r + x / r) / two;
        if (next >= r) break;
        r = std::move(next);
    }
    while (r * r > x) r -= 1;
    while ((r + 1) * (r + 1) <= x) r += 1;
    bool exact = r * r == x;
    return {std::move(r), exact};
}

}  // namespace grat
