#include "grat/tilings.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace grat::tiles {

using geom::Point;

UnitTriangle UnitTriangle::with_apex(double apex_angle, double base) {
    if (!(apex_angle > 0.0) || !(apex_angle < std::numbers::pi))
        throw std::domain_error("UnitTriangle: apex angle must be in (0, pi)");
    if (!(base > 0.0)) throw std::domain_error("UnitTriangle: base must be positive");
    UnitTriangle t;
    t.base = base;
    t.apex_angle = apex_angle;
    t.height = base / (2.0 * std::tan(apex_angle / 2.0));
    return t;
}

UnitTriangle UnitTriangle::for_ngon(int n, double base) {
    if (n < 3) throw std::domain_error("UnitTriangle: n must be at least 3");
    return with_apex(2.0 * std::numbers::pi / n, base);
}

std::array<Point, 3> UnitTriangle::canonical_vertices() const {
    return {Point{0.0, 0.0}, Point{-base / 2.0, -height}, Point{base / 2.0, -height}};
}

std::array<Point, 3> placement_vertices(const TrianglePlacement& placement,
                                        const UnitTriangle& unit) {
    std::array<Point, 3> out = unit.canonical_vertices();
    Point shift{placement.unit_tx * unit.base, placement.unit_ty * unit.height};
    for (Point& v : out) {
        v = geom::rotate(geom::rotate(v, placement.local_rot) + shift, placement.frame_rot);
    }
    return out;
}

std::vector<TrianglePlacement> tile_triangle(int k, double apex_angle) {
    if (k < 1) throw std::domain_error("tile_triangle: k must be at least 1");
    UnitTriangle::with_apex(apex_angle);  // validate the angle
    std::vector<TrianglePlacement> placements;
    placements.reserve(static_cast<std::size_t>(k) * k);
    for (int row = 1; row <= k; ++row) {
        // Row r spans heights (r-1)h..rh below the apex: r Up tiles whose
        // apexes sit on the upper line, separated by r-1 Down tiles.
        for (int col = 1; col <= 2 * row - 1; ++col) {
            TrianglePlacement p;
            p.row = row;
            p.col = col;
            if (col % 2 == 1) {
                int j = (col - 1) / 2;
                p.orientation = Orientation::Up;
                p.local_rot = 0.0;
                p.unit_tx = j - (row - 1) / 2.0;
                p.unit_ty = -(row - 1);
            } else {
                int j = col / 2 - 1;
                p.orientation = Orientation::Down;
                p.local_rot = std::numbers::pi;
                p.unit_tx = j - (row - 1) / 2.0 + 0.5;
                p.unit_ty = -row;
            }
            placements.push_back(p);
        }
    }
    return placements;
}

NgonAssembly assemble_ngon(int n, int side, Point center) {
    if (n < 3) throw std::domain_error("assemble_ngon: n must be at least 3");
    if (side < 1) throw std::domain_error("assemble_ngon: side must be a positive integer");

    NgonAssembly assembly;
    assembly.n = n;
    assembly.side = side;
    double rotation = -std::numbers::pi / 2 - std::numbers::pi / n;
    assembly.polygon = geom::regular_polygon(n, static_cast<double>(side), center, rotation);
    assembly.unit = UnitTriangle::for_ngon(n);
    assembly.unit_wedge_count = n * side * side;

    std::vector<TrianglePlacement> base_tiles = tile_triangle(side, assembly.unit.apex_angle);
    assembly.wedges.reserve(static_cast<std::size_t>(assembly.unit_wedge_count));
    for (int w = 0; w < n; ++w) {
        const Point& a = assembly.polygon.vertices[static_cast<std::size_t>(w)];
        const Point& b = assembly.polygon.vertices[static_cast<std::size_t>((w + 1) % n)];
        Point mid = 0.5 * (a + b) - center;
        // Canonical wedges open along -y; rotate that axis onto the outward
        // edge-midpoint direction.
        double frame_rot = std::atan2(mid.y, mid.x) + std::numbers::pi / 2;
        for (TrianglePlacement p : base_tiles) {
            p.wedge = w;
            p.frame_rot = frame_rot;
            assembly.wedges.push_back(p);
        }
    }
    return assembly;
}

Theorem2Scene theorem2_witness_scene(int n) {
    if (n < 2) throw std::domain_error("theorem2_witness_scene: n must be at least 2");
    Theorem2Scene scene;
    scene.n = n;
    int m = n * n;
    scene.room = assemble_ngon(m, n);
    scene.room_unit_wedges = scene.room.unit_wedge_count;
    scene.room_area = geom::polygon_area(scene.room.polygon);

    // Lay the n^2 unit carpets out on a grid beside the room; placement is
    // cosmetic, the accounting is what matters.
    double room_radius = static_cast<double>(n) / (2.0 * std::sin(std::numbers::pi / m));
    double carpet_radius = 1.0 / (2.0 * std::sin(std::numbers::pi / m));
    double pitch = 2.2 * carpet_radius;
    int cols = n;
    for (int i = 0; i < m; ++i) {
        Point center{room_radius + pitch + (i % cols) * pitch,
                     ((i / cols) - (n - 1) / 2.0) * pitch};
        NgonAssembly carpet = assemble_ngon(m, 1, center);
        scene.carpet_unit_wedges += carpet.unit_wedge_count;
        scene.carpet_area_total += geom::polygon_area(carpet.polygon);
        scene.carpets.push_back(std::move(carpet));
    }
    scene.wedge_counts_equal = scene.room_unit_wedges == scene.carpet_unit_wedges;
    scene.areas_equal = std::abs(scene.room_area - scene.carpet_area_total) <=
                        1e-9 * scene.room_area;
    return scene;
}

RowTilingReport row_accounting(const BigInt& n, const BigInt& a, const BigInt& b) {
    if (n < BigInt(3)) throw std::domain_error("row_accounting: n must be at least 3");
    if (a < BigInt(1) || b < BigInt(1))
        throw std::domain_error("row_accounting: sides must be positive");

    RowTilingReport report;
    report.n = n;
    report.a = a;
    report.b = b;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    report.k = q;
    report.lambda = Rational(r, b);
    report.lambda_zero = r.is_zero();
    for (BigInt row = 1; row <= report.k; row += 1) {
        report.carpets_per_row.push_back(BigInt(2) * row - BigInt(1));
    }
    report.total_carpets = report.k * report.k;
    report.n_is_k_squared = report.lambda_zero && n == report.k * report.k;
    report.strip_unit_rows = r;
    BigInt covered = report.k * b;
    report.strip_unit_triangles = a * a - covered * covered;
    // The strip holds the unit-triangle rows covered+1 .. a; summed row by
    // row they must close the a^2 total.
    BigInt strip_sum = 0;
    for (BigInt row = covered + BigInt(1); row <= a; row += 1) {
        strip_sum += BigInt(2) * row - BigInt(1);
    }
    report.backfill_consistent = strip_sum == report.strip_unit_triangles;
    return report;
}

RowTilingReport row_tile(const BigInt& n, const BigInt& a, const BigInt& b) {
    if (!verify_witness(n, a, b))
        throw std::domain_error("row_tile: (" + a.to_decimal() + ", " + b.to_decimal() +
                                ") is not a witness for n = " + n.to_decimal());
    return row_accounting(n, a, b);
}

BigInt parallelogram_double(int k) {
    if (k < 1) throw std::domain_error("parallelogram_double: k must be at least 1");
    BigInt total = 0;
    BigInt row_count(2 * static_cast<long long>(k));
    for (int row = 1; row <= k; ++row) total += row_count;
    return total;
}

}  // namespace grat::tiles
