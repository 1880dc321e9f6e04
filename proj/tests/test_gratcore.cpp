#include "doctest.h"

#include <random>

#include "grat/gratcore.hpp"
#include "grat/polyexpr.hpp"

using grat::BigInt;
using grat::CandidatePair;
using grat::DescentStrategy;
using grat::PolyExpr;
using grat::Witness;

TEST_CASE("verify_witness on the paper pairs") {
    CHECK(grat::verify_witness(4, 2, 1));
    CHECK(grat::verify_witness(9, 3, 1));
    CHECK_FALSE(grat::verify_witness(5, 2, 1));
    CHECK_THROWS_AS(grat::verify_witness(2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(grat::verify_witness(4, 0, 1), std::domain_error);
}

TEST_CASE("witness scaling family: (k*m, m) verifies for n = k^2") {
    for (long long k = 2; k <= 12; ++k) {
        for (long long m = 1; m <= 5; ++m) {
            CHECK(grat::verify_witness(BigInt(k * k), BigInt(k * m), BigInt(m)));
        }
    }
}

TEST_CASE("is_grational decision and canonical witness") {
    auto four = grat::is_grational(4);
    REQUIRE(four.grational);
    CHECK(four.witness->a == BigInt(2));
    CHECK(four.witness->b == BigInt(1));

    auto nine = grat::is_grational(9);
    REQUIRE(nine.grational);
    CHECK(nine.witness->a == BigInt(3));
    CHECK(nine.witness->b == BigInt(1));

    CHECK_FALSE(grat::is_grational(3).grational);
    CHECK_FALSE(grat::is_grational(7).grational);
    CHECK_THROWS_AS(grat::is_grational(2), std::domain_error);
    CHECK_THROWS_AS(grat::is_grational(-4), std::domain_error);
}

TEST_CASE("brute_force_witness examples") {
    auto w16 = grat::brute_force_witness(16, 10);
    REQUIRE(w16.has_value());
    CHECK(w16->a == BigInt(4));
    CHECK(w16->b == BigInt(1));
    CHECK_FALSE(grat::brute_force_witness(5, 100).has_value());
    CHECK_FALSE(grat::brute_force_witness(2, 3).has_value());
}

TEST_CASE("oracle equivalence: decision, scan and perfect-square test agree") {
    for (long long n = 3; n <= 500; ++n) {
        CAPTURE(n);
        bool decision = grat::is_grational(n).grational;
        bool scan = grat::brute_force_witness(n, 50).has_value();
        bool square = grat::integer_sqrt(BigInt(n)).exact;
        CHECK(decision == scan);
        CHECK(decision == square);
    }
}

TEST_CASE("descent steps from the worked examples") {
    SUBCASE("n=3 paper map") {
        CandidatePair p1(3, 5, 3);
        CHECK(p1.defect == BigInt(-2));
        CandidatePair out1 = grat::descent_step(p1, DescentStrategy::paper3());
        CHECK(out1.a == BigInt(1));
        CHECK(out1.b == BigInt(1));
        CHECK(out1.defect == BigInt(-2));

        CandidatePair p2(3, 7, 4);
        CHECK(p2.defect == BigInt(1));
        CandidatePair out2 = grat::descent_step(p2, DescentStrategy::paper3());
        CHECK(out2.a == BigInt(2));
        CHECK(out2.b == BigInt(1));
        CHECK(out2.defect == BigInt(1));
    }
    SUBCASE("n=5 generic map, defect multiplies by k^2 - n = -1") {
        CandidatePair p(5, 9, 4);
        CHECK(p.defect == BigInt(1));
        CandidatePair out = grat::descent_step(p, DescentStrategy::parse("generic"));
        CHECK(out.a == BigInt(2));
        CHECK(out.b == BigInt(1));
        CHECK(out.defect == BigInt(-1));
    }
    SUBCASE("strategy/n mismatches are domain errors") {
        CandidatePair p(5, 9, 4);
        CHECK_THROWS_AS(grat::descent_step(p, DescentStrategy::paper3()), std::domain_error);
        CandidatePair q(4, 2, 1);
        CHECK_THROWS_AS(grat::descent_step(q, DescentStrategy::parse("generic")),
                        std::domain_error);
        CHECK_THROWS_AS(grat::descent_step(CandidatePair(3, 7, 4), DescentStrategy::paper5()),
                        std::domain_error);
    }
    SUBCASE("window violations name the failed inequality") {
        try {
            grat::descent_step(CandidatePair(3, 9, 4), DescentStrategy::paper3());
            FAIL("expected DescentInapplicable");
        } catch (const grat::DescentInapplicable& e) {
            CHECK(e.inequality == "a < 2*b");
        }
        try {
            grat::descent_step(CandidatePair(5, 2, 1), DescentStrategy::parse("generic"));
            FAIL("expected DescentInapplicable");
        } catch (const grat::DescentInapplicable& e) {
            CHECK(e.inequality == "k*b < a");
        }
    }
}

TEST_CASE("descent chains terminate with the documented shapes") {
    SUBCASE("n=3 from (7,4)") {
        auto chain = grat::descent_chain(CandidatePair(3, 7, 4), DescentStrategy::paper3(), 64);
        REQUIRE(chain.steps.size() == 2);
        CHECK(chain.steps[1].a == BigInt(2));
        CHECK(chain.steps[1].b == BigInt(1));
        CHECK(chain.reason == grat::DescentChain::Reason::PreconditionFailed);
    }
    SUBCASE("n=5 from (9,4)") {
        auto chain =
            grat::descent_chain(CandidatePair(5, 9, 4), DescentStrategy::parse("generic"), 64);
        REQUIRE(chain.steps.size() == 2);
        CHECK(chain.steps[1].a == BigInt(2));
        CHECK(chain.steps[1].b == BigInt(1));
        CHECK(chain.reason == grat::DescentChain::Reason::PreconditionFailed);
        CHECK(chain.failed_inequality == "k*b < a");
    }
    SUBCASE("max_steps = 0 returns just the start") {
        auto chain = grat::descent_chain(CandidatePair(3, 2, 1), DescentStrategy::paper3(), 0);
        CHECK(chain.steps.size() == 1);
        CHECK(chain.reason == grat::DescentChain::Reason::MaxSteps);
    }
    SUBCASE("b-values strictly decrease along any chain") {
        auto chain =
            grat::descent_chain(CandidatePair(3, 989, 571), DescentStrategy::paper3(), 64);
        REQUIRE(chain.steps.size() > 2);
        for (std::size_t i = 1; i < chain.steps.size(); ++i) {
            CHECK(chain.steps[i].b < chain.steps[i - 1].b);
            CHECK(chain.steps[i].a < chain.steps[i - 1].a);
        }
    }
}

TEST_CASE("defect transformation laws") {
    std::mt19937_64 rng(0xdefec7u);
    SUBCASE("paper3 preserves the defect for all integer pairs") {
        for (int i = 0; i < 1000; ++i) {
            long long a = static_cast<long long>(rng() % 2000001) - 1000000;
            long long b = static_cast<long long>(rng() % 2000001) - 1000000;
            BigInt defect_in = BigInt(a) * BigInt(a) - BigInt(3) * BigInt(b) * BigInt(b);
            auto [a2, b2] = grat::apply_descent_map(3, a, b, DescentStrategy::paper3());
            BigInt defect_out = a2 * a2 - BigInt(3) * b2 * b2;
            CHECK(defect_out == defect_in);
        }
    }
    SUBCASE("generic map scales the defect by k^2 - n, valid windows") {
        for (long long n : {3, 5, 6, 7, 8, 10, 47}) {
            BigInt k = grat::integer_sqrt(n).root;
            auto strategy = DescentStrategy::generic_floor_sqrt(k);
            for (int i = 0; i < 400; ++i) {
                BigInt b(static_cast<long long>(rng() % 100000 + 1));
                // draw a from the window (k*b, (k+1)*b)
                BigInt lo = k * b + 1;
                BigInt hi = (k + 1) * b - 1;
                if (hi < lo) continue;
                BigInt a = lo + BigInt(static_cast<long long>(rng() % 100000)) % (hi - lo + 1);
                CandidatePair pair(n, a, b);
                auto [a2, b2] = grat::apply_descent_map(n, a, b, strategy);
                BigInt defect_out = a2 * a2 - BigInt(n) * b2 * b2;
                CHECK(defect_out == (k * k - n) * pair.defect);
            }
        }
    }
}

TEST_CASE("reduce_poly canonicalization") {
    const PolyExpr a = PolyExpr::a();
    const PolyExpr b = PolyExpr::b();

    SUBCASE("defining relation vanishes") {
        PolyExpr e = a * a - PolyExpr::constant(5) * b * b;
        CHECK(e.reduced(5).is_zero());
    }
    SUBCASE("single substitution a^2*b -> 3b^3") {
        PolyExpr e = a * a * b;
        CHECK(e.reduced(3) == PolyExpr::monomial(3, 0, 3));
    }
    SUBCASE("paper3 defect law as a polynomial identity") {
        PolyExpr lhs = (PolyExpr::constant(2) * a - PolyExpr::constant(3) * b).pow(2) -
                       PolyExpr::constant(3) * (PolyExpr::constant(2) * b - a).pow(2);
        PolyExpr rhs = a * a - PolyExpr::constant(3) * b * b;
        CHECK((lhs - rhs).reduced(3).is_zero());
        CHECK((lhs - rhs).reduced(3) == (lhs - rhs).reduced(3).reduced(3));  // idempotent
    }
    SUBCASE("reduction has degree at most 1 in a and is idempotent and linear") {
        std::mt19937_64 rng(0x70111u);
        for (int i = 0; i < 100; ++i) {
            PolyExpr e1, e2;
            for (int t = 0; t < 6; ++t) {
                e1 += PolyExpr::monomial(BigInt(static_cast<long long>(rng() % 21) - 10),
                                         rng() % 5, rng() % 5);
                e2 += PolyExpr::monomial(BigInt(static_cast<long long>(rng() % 21) - 10),
                                         rng() % 5, rng() % 5);
            }
            PolyExpr r1 = e1.reduced(7);
            CHECK(r1.degree_a() <= 1);
            CHECK(r1.reduced(7) == r1);
            CHECK((e1 + e2).reduced(7) == e1.reduced(7) + e2.reduced(7));
        }
    }
}

TEST_CASE("verify_identity: the pentagon and triangle identities") {
    const PolyExpr a = PolyExpr::a();
    const PolyExpr b = PolyExpr::b();
    const PolyExpr two = PolyExpr::constant(2);
    const PolyExpr three = PolyExpr::constant(3);
    const PolyExpr five = PolyExpr::constant(5);

    // small-pentagon side: 3b^2 - ab == (a - 2b)(a + b) mod a^2 - 5b^2
    CHECK(grat::verify_identity(three * b * b - a * b, (a - two * b) * (a + b), 5));
    // uncovered-triangle edge: b - 2(2b - a) == 2a - 3b (linear, any n)
    CHECK(grat::verify_identity(b - two * (two * b - a), two * a - three * b, 3));
    // (5b - 2a)^2 == 5 (a - 2b)^2 mod a^2 - 5b^2
    CHECK(grat::verify_identity((five * b - two * a).pow(2), five * (a - two * b).pow(2), 5));
    // and a false identity stays false
    CHECK_FALSE(grat::verify_identity(a * b, b * b, 5));
}

TEST_CASE("pentagon diagonal identity holds exactly for several b") {
    for (long long b : {1, 2, 7, 12345}) {
        CAPTURE(b);
        CHECK(grat::pentagon_diagonal_identity(b));
    }
    CHECK_THROWS_AS(grat::pentagon_diagonal_identity(0), std::domain_error);
}

TEST_CASE("nice-gon validation and area") {
    grat::NiceGon g(6, 1);
    CHECK(g.area() == doctest::Approx(2.598076211353316).epsilon(1e-12));
    CHECK_THROWS_AS(grat::NiceGon(2, 1), std::domain_error);
    CHECK_THROWS_AS(grat::NiceGon(5, 0), std::domain_error);
}
