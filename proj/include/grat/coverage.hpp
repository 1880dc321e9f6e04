#pragma once

#include <map>
#include <vector>

#include "grat/overlay.hpp"

namespace grat::geom {

/// One room plus the carpets laid inside it.
struct Arrangement {
    Polygon room;
    std::vector<Polygon> carpets;
    double tolerance = 1e-9;
};

/// Validates that every carpet vertex lies inside or on the room boundary
/// within the tolerance. Throws std::invalid_argument otherwise.
Arrangement make_arrangement(Polygon room, std::vector<Polygon> carpets,
                             double tolerance = 1e-9);

/// A connected part of the room covered by a constant number of carpets.
struct DepthRegion {
    int depth = 0;
    double area = 0.0;
    Point sample{};
    std::vector<Point> outer;
    std::vector<std::vector<Point>> holes;
};

struct CoverageReport {
    std::map<int, double> area_by_depth;
    double room_area = 0.0;
    double carpet_area_total = 0.0;
    double uncovered = 0.0;  // area at depth 0
    double excess = 0.0;     // sum over depth k >= 2 of (k-1) * area_k
    /// uncovered - excess - (room_area - carpet_area_total); ~0 always.
    double residual = 0.0;
    std::vector<DepthRegion> regions;  // sorted by depth, then area descending
    OverlayDiagnostics diagnostics;

    double area_at_depth(int depth) const;
    int regions_at_depth(int depth) const;
    /// Number of connected regions with depth >= 2.
    int multiply_covered_regions() const;
};

/// Partitions the room by coverage depth via one arrangement of all edges;
/// each face is counted once at the depth of its interior sample point.
CoverageReport coverage_depth(const Arrangement& arr);

/// Sorted boundary edge lengths of a region's outer loop; the congruence
/// checks compare area plus this multiset.
std::vector<double> region_edge_lengths(const DepthRegion& region);

}  // namespace grat::geom
