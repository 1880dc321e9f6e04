#pragma once

#include <array>
#include <vector>

#include "grat/geom.hpp"
#include "grat/gratcore.hpp"
#include "grat/rational.hpp"

namespace grat::tiles {

/// Isosceles triangle with the given base and apex (central) angle; n of them
/// assemble into a regular n-gon when apex_angle == 2*pi/n.
struct UnitTriangle {
    double base = 1.0;
    double apex_angle = 0.0;
    double height = 0.0;  // base / (2 * tan(apex_angle / 2))

    static UnitTriangle with_apex(double apex_angle, double base = 1.0);
    static UnitTriangle for_ngon(int n, double base = 1.0);  // apex 2*pi/n

    double area() const { return 0.5 * base * height; }
    /// Canonical vertices: apex at the origin, base centered below at -height.
    std::array<geom::Point, 3> canonical_vertices() const;
};

enum class Orientation { Up, Down };

/// One tile in a row tiling: row r holds 2r-1 tiles with alternating
/// orientation; Down tiles are the Up tile rotated half a turn.
struct TrianglePlacement {
    int wedge = 0;  // n-gon wedge index; 0 for plain triangle tilings
    int row = 1;    // 1-based, counted from the apex
    int col = 1;    // 1-based within the row; odd = Up, even = Down
    Orientation orientation = Orientation::Up;
    double local_rot = 0.0;  // pi for Down
    double unit_tx = 0.0;    // translation in multiples of the base ...
    double unit_ty = 0.0;    // ... and of the height
    double frame_rot = 0.0;  // wedge rotation about the shared apex
};

/// Realizes a placement for a concrete triangle size.
std::array<geom::Point, 3> placement_vertices(const TrianglePlacement& placement,
                                              const UnitTriangle& unit);

/// k^2 congruent isosceles triangles arranged into a similar triangle with
/// base k: row r gets 2r-1 tiles, orientations alternating.
std::vector<TrianglePlacement> tile_triangle(int k, double apex_angle);

/// A regular n-gon assembled from n wedges, each wedge tiled by side^2 unit
/// wedges (apex at the polygon center, base outward).
struct NgonAssembly {
    int n = 0;
    int side = 0;
    geom::Polygon polygon;
    UnitTriangle unit;  // base 1, apex 2*pi/n
    std::vector<TrianglePlacement> wedges;
    int unit_wedge_count = 0;  // n * side^2
};

NgonAssembly assemble_ngon(int n, int side, geom::Point center = {});

/// Room: nice n^2-gon of side n (n^4 unit wedges); carpets: n^2 nice
/// n^2-gons of side 1. Both totals are checked.
struct Theorem2Scene {
    int n = 0;
    NgonAssembly room;
    std::vector<NgonAssembly> carpets;
    int room_unit_wedges = 0;
    int carpet_unit_wedges = 0;
    double room_area = 0.0;
    double carpet_area_total = 0.0;
    bool wedge_counts_equal = false;
    bool areas_equal = false;  // within 1e-9 relative
};

Theorem2Scene theorem2_witness_scene(int n);

/// Row-tiling accounting for triangular room (base a) and carpets (base b).
struct RowTilingReport {
    BigInt n, a, b;
    BigInt k;                          // floor(a/b) full carpet rows
    Rational lambda;                   // a/b - k
    std::vector<BigInt> carpets_per_row;  // 1, 3, ..., 2k-1
    BigInt total_carpets;              // k^2
    bool lambda_zero = false;
    bool n_is_k_squared = false;       // n == k^2, checked when lambda == 0
    // Contradiction branch (lambda != 0): the leftover strip is shorter than
    // one carpet row and is backfilled by unit triangles.
    BigInt strip_unit_rows;            // lambda * b = a - k*b
    BigInt strip_unit_triangles;       // a^2 - (k*b)^2
    bool backfill_consistent = false;  // strip triangles close the a^2 total
};

/// Pure accounting; does not require (a, b) to be a witness. The validated
/// entry point below does.
RowTilingReport row_accounting(const BigInt& n, const BigInt& a, const BigInt& b);

/// Requires verify_witness(n, a, b); throws std::domain_error otherwise.
RowTilingReport row_tile(const BigInt& n, const BigInt& a, const BigInt& b);

/// Carpets in the doubled (parallelogram) room: k rows of 2k, counted row by
/// row.
BigInt parallelogram_double(int k);

}  // namespace grat::tiles
