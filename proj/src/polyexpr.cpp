#include "grat/polyexpr.hpp"

#include <ostream>

namespace grat {

PolyExpr PolyExpr::constant(BigInt c) { return monomial(std::move(c), 0, 0); }
PolyExpr PolyExpr::a() { return monomial(BigInt(1), 1, 0); }
PolyExpr PolyExpr::b() { return monomial(BigInt(1), 0, 1); }

PolyExpr PolyExpr::monomial(BigInt c, unsigned deg_a, unsigned deg_b) {
    PolyExpr out;
    if (!c.is_zero()) out.terms_.emplace(std::make_pair(deg_a, deg_b), std::move(c));
    return out;
}

unsigned PolyExpr::degree_a() const {
    unsigned d = 0;
    for (const auto& [key, coeff] : terms_) d = std::max(d, key.first);
    return d;
}

void PolyExpr::add_term(unsigned deg_a, unsigned deg_b, const BigInt& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(deg_a, deg_b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyExpr PolyExpr::operator-() const {
    PolyExpr out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, -coeff);
    return out;
}

PolyExpr& PolyExpr::operator+=(const PolyExpr& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key.first, key.second, coeff);
    return *this;
}

PolyExpr& PolyExpr::operator-=(const PolyExpr& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key.first, key.second, -coeff);
    return *this;
}

PolyExpr& PolyExpr::operator*=(const PolyExpr& rhs) {
    PolyExpr out;
    for (const auto& [lk, lc] : terms_) {
        for (const auto& [rk, rc] : rhs.terms_) {
            out.add_term(lk.first + rk.first, lk.second + rk.second, lc * rc);
        }
    }
    *this = std::move(out);
    return *this;
}

PolyExpr PolyExpr::pow(unsigned exp) const {
    PolyExpr out = constant(BigInt(1));
    PolyExpr base = *this;
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

PolyExpr PolyExpr::reduced(const BigInt& n) const {
    PolyExpr out;
    for (const auto& [key, coeff] : terms_) {
        unsigned da = key.first;
        unsigned db = key.second;
        // a^da = a^(da mod 2) * (a^2)^(da/2) -> a^(da mod 2) * n^(da/2) * b^(da - da mod 2)
        unsigned squares = da / 2;
        out.add_term(da % 2, db + 2 * squares, coeff * grat::pow(BigInt(n), squares));
    }
    return out;
}

std::string PolyExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // map order is (deg_a, deg_b) ascending; print descending for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, coeff] = *it;
        BigInt mag = coeff.abs();
        if (out.empty()) {
            if (coeff.is_negative()) out += "-";
        } else {
            out += coeff.is_negative() ? " - " : " + ";
        }
        bool has_vars = key.first > 0 || key.second > 0;
        if (!has_vars || mag != BigInt(1)) {
            out += mag.to_decimal();
            if (has_vars) out += "*";
        }
        if (key.first == 1) out += "a";
        if (key.first > 1) out += "a^" + std::to_string(key.first);
        if (key.first > 0 && key.second > 0) out += "*";
        if (key.second == 1) out += "b";
        if (key.second > 1) out += "b^" + std::to_string(key.second);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PolyExpr& v) {
    return os << v.to_string();
}

bool verify_identity(const PolyExpr& lhs, const PolyExpr& rhs, const BigInt& n) {
    return (lhs - rhs).reduced(n).is_zero();
}

}  // namespace grat
