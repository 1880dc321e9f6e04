#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <random>

#include "grat/coverage.hpp"
#include "grat/overlay.hpp"

using namespace grat::geom;

namespace {

Polygon square(double x0, double y0, double side) {
    return Polygon{{{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}}};
}

double total_area(const std::vector<Region>& regions) {
    double area = 0.0;
    for (const Region& r : regions) area += r.area;
    return area;
}

}  // namespace

TEST_CASE("boolean_op: unit squares offset by (0.5, 0)") {
    Polygon p = square(0, 0, 1);
    Polygon q = square(0.5, 0, 1);

    auto inter = boolean_op(BoolOp::Intersection, p, q);
    REQUIRE(inter.size() == 1);
    CHECK(inter[0].area == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(inter[0].holes.empty());
    CHECK(inter[0].outer.size() == 4);

    auto uni = boolean_op(BoolOp::Union, p, q);
    REQUIRE(uni.size() == 1);
    CHECK(uni[0].area == doctest::Approx(1.5).epsilon(1e-9));

    auto diff = boolean_op(BoolOp::Difference, p, q);
    REQUIRE(diff.size() == 1);
    CHECK(diff[0].area == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("boolean_op: disjoint squares") {
    Polygon p = square(0, 0, 1);
    Polygon q = square(5, 5, 1);
    CHECK(boolean_op(BoolOp::Intersection, p, q).empty());
    auto uni = boolean_op(BoolOp::Union, p, q);
    CHECK(uni.size() == 2);
    CHECK(total_area(uni) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("boolean_op: difference with a hole (annular region)") {
    Polygon outer = square(0, 0, 2);
    Polygon inner = square(0.5, 0.5, 1);
    auto diff = boolean_op(BoolOp::Difference, outer, inner);
    REQUIRE(diff.size() == 1);
    CHECK(diff[0].area == doctest::Approx(3.0).epsilon(1e-9));
    REQUIRE(diff[0].holes.size() == 1);
    CHECK(std::abs(signed_area(diff[0].holes[0])) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(diff[0].outer.size() == 4);
}

TEST_CASE("boolean_op: identical squares (full overlap, shared edges)") {
    Polygon p = square(0, 0, 1);
    auto inter = boolean_op(BoolOp::Intersection, p, p);
    REQUIRE(inter.size() == 1);
    CHECK(inter[0].area == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(boolean_op(BoolOp::Difference, p, p).empty());
}

TEST_CASE("boolean_op: edge-adjacent squares union into one region") {
    Polygon p = square(0, 0, 1);
    Polygon q = square(1, 0, 1);
    CHECK(boolean_op(BoolOp::Intersection, p, q).empty());
    auto uni = boolean_op(BoolOp::Union, p, q);
    REQUIRE(uni.size() == 1);
    CHECK(uni[0].area == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(uni[0].outer.size() == 4);  // collinear joints simplified away
}

TEST_CASE("boolean_op area additivity on random regular-polygon pairs") {
    std::mt19937_64 rng(0x0a11defau);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> side(0.3, 2.5);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    std::uniform_int_distribution<int> ngon(3, 9);
    for (int i = 0; i < 1000; ++i) {
        CAPTURE(i);
        Polygon p = regular_polygon(ngon(rng), side(rng), {coord(rng), coord(rng)}, angle(rng));
        Polygon q = regular_polygon(ngon(rng), side(rng), {coord(rng), coord(rng)}, angle(rng));
        double ap = polygon_area(p);
        double aq = polygon_area(q);
        double au = total_area(boolean_op(BoolOp::Union, p, q));
        double ai = total_area(boolean_op(BoolOp::Intersection, p, q));
        CHECK(ap + aq == doctest::Approx(au + ai).epsilon(1e-9));
    }
}

TEST_CASE("boolean_op results are pairwise disjoint") {
    // Two separated intersections: an H-shaped overlap via a cross pattern.
    Polygon p{{{0, 0}, {3, 0}, {3, 1}, {0, 1}}};
    Polygon q{{{0.2, -1}, {0.8, -1}, {0.8, 2}, {0.2, 2}}};
    Polygon r{{{2.2, -1}, {2.8, -1}, {2.8, 2}, {2.2, 2}}};
    auto i1 = boolean_op(BoolOp::Intersection, p, q);
    auto i2 = boolean_op(BoolOp::Intersection, p, r);
    REQUIRE(i1.size() == 1);
    REQUIRE(i2.size() == 1);
    CHECK(i1[0].area == doctest::Approx(0.6).epsilon(1e-9));
    // Disjointness of a single op's output pieces: clipping a comb above its
    // spine leaves the three teeth.
    Polygon comb{{{0, 0}, {5, 0}, {5, 3}, {4, 3}, {4, 1}, {3, 1}, {3, 3}, {2, 3}, {2, 1},
                  {1, 1}, {1, 3}, {0, 3}}};
    auto inter = boolean_op(BoolOp::Intersection, comb, square(0, 1.0, 5));
    double sum = total_area(inter);
    REQUIRE(inter.size() == 3);
    for (std::size_t a = 0; a < inter.size(); ++a) {
        CHECK(inter[a].area == doctest::Approx(2.0).epsilon(1e-9));
        for (std::size_t b = a + 1; b < inter.size(); ++b) {
            Polygon pa{inter[a].outer};
            Polygon pb{inter[b].outer};
            CHECK(total_area(boolean_op(BoolOp::Intersection, pa, pb)) ==
                  doctest::Approx(0.0).epsilon(1e-9));
        }
    }
    CHECK(sum == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("coverage_depth: room covered by one equal carpet") {
    Polygon room = square(0, 0, 2);
    Arrangement arr = make_arrangement(room, {room});
    CoverageReport report = coverage_depth(arr);
    CHECK(report.area_at_depth(0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(report.area_at_depth(1) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(report.uncovered == doctest::Approx(0.0));
    CHECK(report.excess == doctest::Approx(0.0));
    CHECK(std::abs(report.residual) < 1e-9);
}

TEST_CASE("coverage_depth: 5x5 room with 4x4 and 3x3 corner carpets") {
    // Rectangle arithmetic oracle: union 16 + 9 - 4 = 21, uncovered 4,
    // one 2x2 doubly covered square.
    Arrangement arr = make_arrangement(square(0, 0, 5), {square(0, 0, 4), square(2, 2, 3)});
    CoverageReport report = coverage_depth(arr);
    CHECK(report.uncovered == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(report.excess == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(report.area_at_depth(2) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(std::abs(report.residual) < 1e-9 * report.room_area);
    CHECK(report.multiply_covered_regions() == 1);

    // The doubly covered region is the square [2,4]^2.
    for (const DepthRegion& region : report.regions) {
        if (region.depth != 2) continue;
        auto lengths = region_edge_lengths(region);
        REQUIRE(lengths.size() == 4);
        for (double len : lengths) CHECK(len == doctest::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("coverage_depth: Tennenbaum scene at room sqrt(2)") {
    double r = std::sqrt(2.0);
    Arrangement arr =
        make_arrangement(square(0, 0, r), {square(0, 0, 1), square(r - 1, r - 1, 1)});
    CoverageReport report = coverage_depth(arr);
    double expected = 6.0 - 4.0 * std::sqrt(2.0);
    CHECK(report.uncovered == doctest::Approx(expected).epsilon(1e-9));
    CHECK(report.excess == doctest::Approx(expected).epsilon(1e-9));
    CHECK(std::abs(report.residual) < 1e-9 * report.room_area);
    CHECK(report.regions_at_depth(0) == 2);
    CHECK(report.multiply_covered_regions() == 1);
}

TEST_CASE("coverage_depth: depth partition sums to the room area") {
    std::mt19937_64 rng(0xdeb7u);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int scene = 0; scene < 25; ++scene) {
        CAPTURE(scene);
        int n = 3 + static_cast<int>(rng() % 8);
        double room_side = 1.0 + 4.0 * unif(rng);
        Polygon room = regular_polygon(n, room_side, {0, 0}, unif(rng));
        double apothem = room_side / (2.0 * std::tan(std::numbers::pi / n));
        std::vector<Polygon> carpets;
        int carpet_count = 1 + static_cast<int>(rng() % 5);
        while (static_cast<int>(carpets.size()) < carpet_count) {
            int m = 3 + static_cast<int>(rng() % 6);
            double max_radius = 0.8 * apothem;
            double side = (0.2 + 0.75 * unif(rng)) * max_radius;
            Point center{(2.0 * unif(rng) - 1.0) * apothem * 0.6,
                         (2.0 * unif(rng) - 1.0) * apothem * 0.6};
            Polygon carpet = regular_polygon(m, side, center, unif(rng) * 6.28);
            bool inside = true;
            for (const Point& v : carpet.vertices) inside = inside && point_in_polygon(v, room);
            if (inside) carpets.push_back(std::move(carpet));
        }
        CoverageReport report = coverage_depth(make_arrangement(room, carpets));
        double sum = 0.0;
        for (const auto& [depth, area] : report.area_by_depth) sum += area;
        CHECK(sum == doctest::Approx(report.room_area).epsilon(1e-9));
        CHECK(std::abs(report.residual) < 1e-9 * report.room_area);
    }
}

TEST_CASE("coverage_depth agrees with a Monte Carlo point-sampling oracle") {
    Polygon room = regular_polygon(5, 3.0, {0, 0}, 0.4);
    std::vector<Polygon> carpets = {
        regular_polygon(4, 1.2, {0.5, 0.2}, 0.1),
        regular_polygon(3, 1.4, {-0.6, -0.3}, 1.2),
        regular_polygon(6, 0.8, {0.1, 0.8}, 0.7),
    };
    Arrangement arr = make_arrangement(room, carpets);
    CoverageReport report = coverage_depth(arr);

    std::mt19937_64 rng(0x5a317eu);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    std::map<int, int> hits;
    int inside_count = 0;
    const int samples = 200000;
    for (int i = 0; i < samples; ++i) {
        Point p{ux(rng), ux(rng)};
        if (!point_in_polygon(p, room)) continue;
        ++inside_count;
        int depth = 0;
        for (const Polygon& carpet : carpets) depth += point_in_polygon(p, carpet) ? 1 : 0;
        hits[depth] += 1;
    }
    for (const auto& [depth, area] : report.area_by_depth) {
        double fraction = area / report.room_area;
        double sampled = static_cast<double>(hits[depth]) / inside_count;
        // 5-sigma binomial bound
        double sigma = std::sqrt(fraction * (1 - fraction) / inside_count);
        CHECK(std::abs(sampled - fraction) < 5.0 * sigma + 1e-6);
    }
}

TEST_CASE("arrangement validation rejects carpets outside the room") {
    CHECK_THROWS_AS(make_arrangement(square(0, 0, 2), {square(1.5, 0, 1)}),
                    std::invalid_argument);
    CHECK_NOTHROW(make_arrangement(square(0, 0, 2), {square(1.0, 0, 1)}));
}
