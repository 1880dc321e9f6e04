#include "grat/gratcore.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace grat {

NiceGon::NiceGon(int n_, BigInt side_) : n(n_), side(std::move(side_)) {
    if (n < 3) throw std::domain_error("NiceGon: n must be at least 3");
    if (side < BigInt(1)) throw std::domain_error("NiceGon: side must be positive");
}

double NiceGon::area() const {
    double s = side.to_double();
    return n / 4.0 * s * s / std::tan(std::numbers::pi / n);
}

Witness::Witness(BigInt n_, BigInt a_, BigInt b_)
    : n(std::move(n_)), a(std::move(a_)), b(std::move(b_)) {
    if (n < BigInt(3)) throw std::domain_error("Witness: n must be at least 3");
    if (a < BigInt(1) || b < BigInt(1))
        throw std::domain_error("Witness: sides must be positive");
    if (a * a != n * b * b)
        throw std::domain_error("Witness: a^2 != n*b^2 for (" + a.to_decimal() + ", " +
                                b.to_decimal() + ") at n = " + n.to_decimal());
}

CandidatePair::CandidatePair(BigInt n_, BigInt a_, BigInt b_)
    : n(std::move(n_)), a(std::move(a_)), b(std::move(b_)) {
    if (n < BigInt(3)) throw std::domain_error("CandidatePair: n must be at least 3");
    if (a < BigInt(1) || b < BigInt(1))
        throw std::domain_error("CandidatePair: sides must be positive");
    defect = a * a - n * b * b;
}

DescentStrategy DescentStrategy::paper3() { return DescentStrategy(Kind::Paper3, BigInt(1)); }
DescentStrategy DescentStrategy::paper5() { return DescentStrategy(Kind::Paper5, BigInt(2)); }

DescentStrategy DescentStrategy::generic_floor_sqrt(BigInt k) {
    if (k < BigInt(1)) throw std::domain_error("DescentStrategy: k must be positive");
    return DescentStrategy(Kind::GenericFloorSqrt, std::move(k));
}

DescentStrategy DescentStrategy::parse(const std::string& name) {
    if (name == "paper3") return paper3();
    if (name == "paper5") return paper5();
    if (name == "generic") return DescentStrategy(Kind::GenericFloorSqrt, BigInt(0));
    throw std::invalid_argument("unknown descent strategy: " + name);
}

void DescentStrategy::check_applicable(const BigInt& n) const {
    switch (kind_) {
        case Kind::Paper3:
            if (n != BigInt(3))
                throw std::domain_error("Paper3 descent applies only to n = 3");
            return;
        case Kind::Paper5:
            if (n != BigInt(5))
                throw std::domain_error("Paper5 descent applies only to n = 5");
            return;
        case Kind::GenericFloorSqrt: {
            ISqrtResult root = integer_sqrt(n);
            if (root.exact)
                throw std::domain_error(
                    "GenericFloorSqrt descent requires n not a perfect square");
            if (!k_.is_zero() && k_ != root.root)
                throw std::domain_error("GenericFloorSqrt: k must equal floor(sqrt(n))");
            return;
        }
    }
}

std::string DescentStrategy::name() const {
    switch (kind_) {
        case Kind::Paper3: return "paper3";
        case Kind::Paper5: return "paper5";
        case Kind::GenericFloorSqrt: return "generic";
    }
    return "?";
}

bool verify_witness(const BigInt& n, const BigInt& a, const BigInt& b) {
    if (n < BigInt(3)) throw std::domain_error("verify_witness: n must be at least 3");
    if (a < BigInt(1) || b < BigInt(1))
        throw std::domain_error("verify_witness: sides must be positive");
    return a * a == n * b * b;
}

GrationalityResult is_grational(const BigInt& n) {
    if (n < BigInt(3))
        throw std::domain_error("is_grational: n must be at least 3 (a 2-gon is not possible)");
    ISqrtResult root = integer_sqrt(n);
    GrationalityResult result;
    result.grational = root.exact;
    if (root.exact) result.witness.emplace(n, root.root, BigInt(1));
    return result;
}

std::optional<Witness> brute_force_witness(const BigInt& n, const BigInt& b_max) {
    // n = 2 is allowed: the scan is also the oracle for the "two is not
    // grational" note, and it can never produce a witness there.
    if (n < BigInt(2)) throw std::domain_error("brute_force_witness: n must be at least 2");
    for (BigInt b = 1; b <= b_max; b += 1) {
        ISqrtResult root = integer_sqrt(n * b * b);
        if (root.exact) return Witness(n, root.root, b);
    }
    return std::nullopt;
}

namespace {

BigInt resolve_multiplier(const BigInt& n, const DescentStrategy& strategy) {
    switch (strategy.kind()) {
        case DescentStrategy::Kind::Paper3: return BigInt(1);  // unused
        case DescentStrategy::Kind::Paper5: return BigInt(2);
        case DescentStrategy::Kind::GenericFloorSqrt:
            return strategy.k().is_zero() ? integer_sqrt(n).root : strategy.k();
    }
    return BigInt(0);
}

}  // namespace

std::pair<BigInt, BigInt> apply_descent_map(const BigInt& n, const BigInt& a,
                                            const BigInt& b, const DescentStrategy& strategy) {
    if (strategy.kind() == DescentStrategy::Kind::Paper3) {
        return {BigInt(2) * a - BigInt(3) * b, BigInt(2) * b - a};
    }
    BigInt k = resolve_multiplier(n, strategy);
    return {n * b - k * a, a - k * b};
}

CandidatePair descent_step(const CandidatePair& pair, const DescentStrategy& strategy) {
    strategy.check_applicable(pair.n);
    const BigInt& a = pair.a;
    const BigInt& b = pair.b;

    if (strategy.kind() == DescentStrategy::Kind::Paper3) {
        if (!(b < a)) throw DescentInapplicable("b < a");
        if (!(a < BigInt(2) * b)) throw DescentInapplicable("a < 2*b");
        if (!(BigInt(2) * a > BigInt(3) * b)) throw DescentInapplicable("2*a > 3*b");
        return CandidatePair(pair.n, BigInt(2) * a - BigInt(3) * b, BigInt(2) * b - a);
    }

    BigInt k = resolve_multiplier(pair.n, strategy);
    // The window k*b < a < (k+1)*b makes b' = a - k*b land in [1, b); the two
    // extra bounds keep a' = n*b - k*a in [1, a) as well.
    if (!(k * b < a)) throw DescentInapplicable("k*b < a");
    if (!(a < (k + BigInt(1)) * b)) throw DescentInapplicable("a < (k+1)*b");
    if (!(k * a < pair.n * b)) throw DescentInapplicable("k*a < n*b");
    if (!(pair.n * b < (k + BigInt(1)) * a)) throw DescentInapplicable("n*b < (k+1)*a");
    return CandidatePair(pair.n, pair.n * b - k * a, a - k * b);
}

DescentChain descent_chain(const CandidatePair& start, const DescentStrategy& strategy,
                           int max_steps) {
    strategy.check_applicable(start.n);
    DescentChain chain;
    chain.steps.push_back(start);
    for (int i = 0; i < max_steps; ++i) {
        try {
            chain.steps.push_back(descent_step(chain.steps.back(), strategy));
        } catch (const DescentInapplicable& e) {
            chain.reason = DescentChain::Reason::PreconditionFailed;
            chain.failed_inequality = e.inequality;
            return chain;
        }
    }
    chain.reason = DescentChain::Reason::MaxSteps;
    return chain;
}

bool pentagon_diagonal_identity(const BigInt& b) {
    if (b < BigInt(1))
        throw std::domain_error("pentagon_diagonal_identity: b must be positive");
    const BigInt five(5);
    Rational rb{b};
    // d = b*(1+sqrt 5)/2, the positive root of d^2 - b*d - b^2 = 0.
    QuadraticNumber d(five, rb / Rational(2), rb / Rational(2));
    QuadraticNumber bq = QuadraticNumber::from_rational(five, rb);
    QuadraticNumber a = QuadraticNumber::sqrt_term(five, rb);  // a = sqrt(5)*b

    QuadraticNumber half_sum = (a + bq) / QuadraticNumber::from_rational(five, Rational(2));
    if (!(d == half_sum)) return false;
    // d/b = b/(d-b), cross-multiplied: d*(d-b) == b^2.
    return d * (d - bq) == bq * bq;
}

}  // namespace grat
