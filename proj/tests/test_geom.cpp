#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grat/geom.hpp"

using namespace grat::geom;

TEST_CASE("regular_polygon matches the closed forms") {
    SUBCASE("square with circumradius sqrt(2)") {
        Polygon square = regular_polygon(4, 2.0, {0, 0}, std::numbers::pi / 4);
        REQUIRE(square.vertices.size() == 4);
        CHECK(square.vertices[0].x == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(square.vertices[0].y == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(square.vertices[1].x == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(square.vertices[2].y == doctest::Approx(-1.0).epsilon(1e-12));
    }
    SUBCASE("hexagon side equals circumradius") {
        Polygon hexagon = regular_polygon(6, 1.0);
        for (const Point& v : hexagon.vertices) {
            CHECK(std::hypot(v.x, v.y) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("triangle circumradius 2/sqrt(3)") {
        Polygon triangle = regular_polygon(3, 2.0, {0, 0}, std::numbers::pi / 2);
        CHECK(std::hypot(triangle.vertices[0].x, triangle.vertices[0].y) ==
              doctest::Approx(1.1547005383792515).epsilon(1e-12));
    }
    SUBCASE("all side lengths agree to 1e-12 relative") {
        for (int n = 3; n <= 17; ++n) {
            Polygon p = regular_polygon(n, 2.5, {1.0, -0.5}, 0.3);
            REQUIRE(static_cast<int>(p.vertices.size()) == n);
            for (int i = 0; i < n; ++i) {
                double side = distance(p.vertices[static_cast<std::size_t>(i)],
                                       p.vertices[static_cast<std::size_t>((i + 1) % n)]);
                CHECK(side == doctest::Approx(2.5).epsilon(1e-12));
            }
        }
    }
    CHECK_THROWS_AS(regular_polygon(2, 1.0), std::domain_error);
    CHECK_THROWS_AS(regular_polygon(5, 0.0), std::domain_error);
}

TEST_CASE("polygon_area closed forms and validation") {
    Polygon unit_square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    CHECK(polygon_area(unit_square) == doctest::Approx(1.0));

    CHECK(polygon_area(regular_polygon(6, 1.0)) ==
          doctest::Approx(2.598076211353316).epsilon(1e-12));
    CHECK(polygon_area(regular_polygon(5, 1.0)) ==
          doctest::Approx(1.7204774005889671).epsilon(1e-12));

    Polygon clockwise{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    CHECK_THROWS_AS(polygon_area(clockwise), std::invalid_argument);
}

TEST_CASE("make_polygon rejects bad input") {
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), std::invalid_argument);
    // bowtie
    CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), std::invalid_argument);
    CHECK_NOTHROW(make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

TEST_CASE("point_in_polygon basics") {
    Polygon pentagon = regular_polygon(5, 2.0);
    CHECK(point_in_polygon({0, 0}, pentagon));
    CHECK_FALSE(point_in_polygon({10, 0}, pentagon));
    CHECK(point_in_or_near(pentagon.vertices[0], pentagon, 1e-9));
    CHECK(distance_to_boundary({0, 0}, pentagon) ==
          doctest::Approx(2.0 / (2 * std::tan(std::numbers::pi / 5))).epsilon(1e-12));
}
