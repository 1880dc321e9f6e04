#pragma once

#include <string>
#include <vector>

#include "grat/coverage.hpp"
#include "grat/quadratic.hpp"

namespace grat::carpets {

/// Square room with two equal square carpets anchored in opposite corners.
/// Requires 0 < carpet_side < room_side < 2*carpet_side so the carpets overlap.
geom::Arrangement tennenbaum_arrangement(double room_side, double carpet_side);

/// Counts and areas of the census-relevant depth classes.
struct RegionCensus {
    int uncovered_regions = 0;             // depth 0
    int doubly_regions = 0;                // depth >= 2
    std::vector<double> uncovered_areas;   // descending
    std::vector<double> doubly_areas;      // descending
};

/// A room with n carpets, one anchored at each room vertex with its edges
/// running along the room's edges, plus the computed coverage.
struct OverlayScene {
    int n = 0;
    double room_side = 0.0;
    double carpet_side = 0.0;
    geom::Arrangement arrangement;
    geom::CoverageReport coverage;
    RegionCensus census;
};

/// Builds the rotationally symmetric corner placement. Throws
/// std::domain_error when a carpet would extend outside the room.
OverlayScene corner_overlay(int n, double room_side, double carpet_side);

struct IdentityReport {
    bool identity_holds = false;  // |uncovered - excess| <= 1e-9 * room area
    bool census_matches = false;  // against the known per-n region tables
    double uncovered_area = 0.0;
    double excess_area = 0.0;
    double residual = 0.0;
    int uncovered_regions = 0;
    int doubly_regions = 0;
    std::string detail;  // region census listing on mismatch

    bool pass() const { return identity_holds && census_matches; }
};

/// Applies the carpets identity to an exact-ratio scene and compares the
/// region census with the known tables (n=3: 3 doubly / 1 uncovered,
/// n=4: 0/0, n=5: 5/6, n=6: 6/7).
IdentityReport overlay_identity_check(const OverlayScene& scene);

/// Exact pentagon quantities in Q(sqrt 5) under a = sqrt(5)*b.
struct PentagonDissection {
    BigInt b;
    QuadraticNumber diagonal;        // d = b*(1+sqrt 5)/2
    QuadraticNumber small_side;      // a - 2b
    QuadraticNumber small_diagonal;  // (3b - a)/2
    bool verified = false;           // all defining identities hold exactly
};

PentagonDissection pentagon_dissection(const BigInt& b);

/// One interpretation of the undefined symbol d in the hexagon argument,
/// evaluated numerically against the measured rhombus area.
struct HexagonCandidate {
    std::string name;      // "short-diagonal" (sqrt(3)*b) or "long-diagonal" (2b)
    double d_value = 0.0;
    double implied_side = 0.0;   // (d / (3b)) * (3b - a)
    double hexagon_area = 0.0;   // regular hexagon of that side
    bool matches = false;        // equals the rhombus area within 1e-9 relative
};

struct HexagonOverlayReport {
    int doubly_regions = 0;
    int uncovered_regions = 0;
    int uncovered_triangles = 0;
    int uncovered_hexagons = 0;
    bool rhombi_congruent = false;
    double rhombus_area = 0.0;
    bool identity_holds = false;
    std::vector<HexagonCandidate> candidates;
    std::string matching_candidate;  // empty when neither interpretation fits
};

/// Census and area accounting for the n = 6 corner overlay at room side
/// sqrt(6)*b, including the candidate evaluations for the hexagon side claim.
HexagonOverlayReport hexagon_overlay_report(const BigInt& b);

}  // namespace grat::carpets
