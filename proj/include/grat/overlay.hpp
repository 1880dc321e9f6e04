#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "grat/geom.hpp"

namespace grat::geom {

struct OverlayDiagnostics {
    int dropped_sliver_faces = 0;
    double dropped_sliver_area = 0.0;

    void merge(const OverlayDiagnostics& other) {
        dropped_sliver_faces += other.dropped_sliver_faces;
        dropped_sliver_area += other.dropped_sliver_area;
    }
};

struct OverlayOptions {
    /// Scene tolerance: collinearity band, glue threshold, sliver area = eps^2.
    double eps = 1e-9;
};

/// A connected region of the plane with constant classification key.
struct OverlayFace {
    int key = 0;
    double area = 0.0;
    Point sample{};                         // interior point
    std::vector<std::vector<Point>> loops;  // loops[0] outer (CCW), rest holes (CW)
};

struct OverlayResult {
    std::vector<OverlayFace> faces;
    /// Exact cell-area accumulation per key, including faces later dropped as
    /// slivers; keys the classifier mapped below zero are not accumulated.
    std::map<int, double> area_by_key;
    OverlayDiagnostics diagnostics;
};

/// Classifier: receives the per-layer membership of a face-interior sample
/// point and returns a key; negative keys discard the region.
using ClassifyFn = std::function<int(const std::vector<bool>&)>;

/// Decomposes the plane by the arrangement of all layer edges and glues
/// equal-key cells into connected faces. Coverage counting by iterated
/// boolean combinations is deliberately not used; each face is classified
/// once through its interior sample point.
OverlayResult overlay(std::span<const Polygon> layers, const ClassifyFn& classify,
                      const OverlayOptions& options = {});

enum class BoolOp { Intersection, Union, Difference };

/// Output region of a boolean operation: a simple outer boundary plus any
/// fully contained holes (a difference can be annular).
struct Region {
    std::vector<Point> outer;
    std::vector<std::vector<Point>> holes;
    double area = 0.0;
};

/// Boolean combination of two valid simple polygons. Result regions are
/// disjoint; area(p) + area(q) == area(union) + area(intersection) within
/// tolerance. Slivers below eps^2 are dropped and reported via diag.
std::vector<Region> boolean_op(BoolOp op, const Polygon& p, const Polygon& q,
                               double eps = 1e-9, OverlayDiagnostics* diag = nullptr);

}  // namespace grat::geom
