#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grat/bigint.hpp"
#include "grat/quadratic.hpp"

namespace grat {

/// A regular n-gon with a positive integer side length.
struct NiceGon {
    int n;
    BigInt side;

    NiceGon(int n_, BigInt side_);  // throws std::domain_error on n < 3 or side < 1
    double area() const;            // (n/4) * s^2 * cot(pi/n)
};

/// Integer pair (a, b) with a^2 == n*b^2, verified at construction.
struct Witness {
    BigInt n;
    BigInt a;
    BigInt b;

    Witness(BigInt n_, BigInt a_, BigInt b_);  // throws std::domain_error if not a witness
};

/// Integer pair (a, b) for a given n, with its defect a^2 - n*b^2 carried
/// exactly. A Witness is a CandidatePair with defect zero.
struct CandidatePair {
    BigInt n;
    BigInt a;
    BigInt b;
    BigInt defect;

    CandidatePair(BigInt n_, BigInt a_, BigInt b_);  // throws on n < 3 or a, b < 1
};

/// The integer maps that shrink a candidate pair.
///   Paper3:             (a, b) -> (2a - 3b, 2b - a), n == 3 only
///   Paper5:             (a, b) -> (5b - 2a, a - 2b), n == 5 only
///   GenericFloorSqrt:   (a, b) -> (n*b - k*a, a - k*b), k == floor(sqrt(n)),
///                       n not a perfect square
class DescentStrategy {
public:
    enum class Kind { Paper3, Paper5, GenericFloorSqrt };

    static DescentStrategy paper3();
    static DescentStrategy paper5();
    static DescentStrategy generic_floor_sqrt(BigInt k);
    /// Parses "paper3" | "paper5" | "generic" (k derived from n at use time).
    static DescentStrategy parse(const std::string& name);

    Kind kind() const { return kind_; }
    /// Multiplier k of the map; 2 for Paper3/Paper5 forms where applicable.
    const BigInt& k() const { return k_; }

    /// Throws std::domain_error unless the strategy may be used for this n.
    void check_applicable(const BigInt& n) const;
    std::string name() const;

private:
    DescentStrategy(Kind kind, BigInt k) : kind_(kind), k_(std::move(k)) {}
    Kind kind_;
    BigInt k_;  // meaningful for GenericFloorSqrt; 0 means "derive from n"
};

/// Raised when a descent step does not apply; names the violated inequality.
struct DescentInapplicable : std::runtime_error {
    explicit DescentInapplicable(const std::string& failed)
        : std::runtime_error("descent inapplicable: " + failed), inequality(failed) {}
    std::string inequality;
};

/// True iff a^2 == n*b^2 exactly. Throws std::domain_error on n < 3.
bool verify_witness(const BigInt& n, const BigInt& a, const BigInt& b);

struct GrationalityResult {
    bool grational = false;
    std::optional<Witness> witness;  // (k, 1) when n == k^2
};

/// n is grational iff n is a perfect square. Throws std::domain_error on n < 3.
GrationalityResult is_grational(const BigInt& n);

/// Exhaustive scan over b <= b_max for the smallest-b witness; independent of
/// is_grational's perfect-square route.
std::optional<Witness> brute_force_witness(const BigInt& n, const BigInt& b_max);

/// The raw algebraic map of a strategy, with no window checks. Exposed so the
/// defect transformation law can be tested on arbitrary pairs.
std::pair<BigInt, BigInt> apply_descent_map(const BigInt& n, const BigInt& a,
                                            const BigInt& b, const DescentStrategy& strategy);

/// One validated descent step. Throws DescentInapplicable when any required
/// inequality fails and std::domain_error on a strategy/n mismatch.
CandidatePair descent_step(const CandidatePair& pair, const DescentStrategy& strategy);

struct DescentChain {
    enum class Reason { PreconditionFailed, MaxSteps };
    std::vector<CandidatePair> steps;  // includes the starting pair
    Reason reason = Reason::MaxSteps;
    std::string failed_inequality;  // set when reason == PreconditionFailed
};

/// Applies descent_step until it no longer applies or max_steps is reached.
DescentChain descent_chain(const CandidatePair& start, const DescentStrategy& strategy,
                           int max_steps);

/// Checks, exactly in Q(sqrt(5)) with a = sqrt(5)*b, that the pentagon
/// diagonal d = b*(1+sqrt(5))/2 satisfies d == (a+b)/2 and d/b == b/(d-b).
bool pentagon_diagonal_identity(const BigInt& b);

}  // namespace grat
