#pragma once

#include <span>
#include <vector>

namespace grat::geom {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(Point a, Point b);
Point operator-(Point a, Point b);
Point operator*(double s, Point p);
double cross(Point a, Point b);
double dot(Point a, Point b);
double distance(Point a, Point b);
Point rotate(Point p, double angle);

/// Simple polygon with counterclockwise vertex order and positive area.
/// Construct through make_polygon to get the invariants checked.
struct Polygon {
    std::vector<Point> vertices;
};

/// Validates >= 3 vertices, finite coordinates, counterclockwise orientation
/// and simplicity. Throws std::invalid_argument on violation.
Polygon make_polygon(std::vector<Point> vertices);

/// Shoelace area of a closed vertex loop; positive for counterclockwise.
double signed_area(std::span<const Point> loop);

/// Area of a valid Polygon. Throws std::invalid_argument for clockwise or
/// degenerate input.
double polygon_area(const Polygon& p);

/// Vertex i sits at angle rotation + 2*pi*i/n on the circumcircle of radius
/// side / (2*sin(pi/n)). Throws std::domain_error on n < 3 or side <= 0.
Polygon regular_polygon(int n, double side, Point center = {}, double rotation = 0.0);

/// Crossing-number test; points on the boundary may land on either side.
bool point_in_polygon(Point p, const Polygon& poly);

/// Distance from p to the closest boundary edge of poly.
double distance_to_boundary(Point p, const Polygon& poly);

/// True if p is inside poly or within eps of its boundary.
bool point_in_or_near(Point p, const Polygon& poly, double eps);

}  // namespace grat::geom
