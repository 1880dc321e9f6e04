#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "grat/bigint.hpp"

namespace grat {

/// Bivariate integer-coefficient polynomial in the symbols a and b.
/// Reduction rewrites every a^2 via a^2 -> n*b^2, so reduced form has
/// degree at most 1 in a.
class PolyExpr {
public:
    PolyExpr() = default;

    static PolyExpr constant(BigInt c);
    static PolyExpr a();
    static PolyExpr b();
    /// c * a^da * b^db
    static PolyExpr monomial(BigInt c, unsigned deg_a, unsigned deg_b);

    bool is_zero() const { return terms_.empty(); }
    /// Largest exponent of a across terms; 0 for the zero polynomial.
    unsigned degree_a() const;

    PolyExpr operator-() const;
    PolyExpr& operator+=(const PolyExpr& rhs);
    PolyExpr& operator-=(const PolyExpr& rhs);
    PolyExpr& operator*=(const PolyExpr& rhs);

    friend PolyExpr operator+(PolyExpr lhs, const PolyExpr& rhs) { return lhs += rhs; }
    friend PolyExpr operator-(PolyExpr lhs, const PolyExpr& rhs) { return lhs -= rhs; }
    friend PolyExpr operator*(PolyExpr lhs, const PolyExpr& rhs) { return lhs *= rhs; }

    PolyExpr pow(unsigned exp) const;

    /// Canonical form modulo a^2 - n*b^2. Idempotent.
    PolyExpr reduced(const BigInt& n) const;

    friend bool operator==(const PolyExpr& lhs, const PolyExpr& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    /// Deterministic term order (a-degree, then b-degree, descending), e.g.
    /// "3*a*b - 5*b^2".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const PolyExpr& v);

private:
    // (deg_a, deg_b) -> nonzero coefficient
    std::map<std::pair<unsigned, unsigned>, BigInt> terms_;

    void add_term(unsigned deg_a, unsigned deg_b, const BigInt& c);
};

/// True iff lhs == rhs as polynomials modulo a^2 - n*b^2. Identities must be
/// stated fraction-free; callers clear denominators first.
bool verify_identity(const PolyExpr& lhs, const PolyExpr& rhs, const BigInt& n);

}  // namespace grat
