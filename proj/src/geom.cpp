#include "grat/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace grat::geom {

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Point rotate(Point p, double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double signed_area(std::span<const Point> loop) {
    double twice = 0.0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const Point& a = loop[i];
        const Point& b = loop[(i + 1) % loop.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / 2.0;
}

namespace {

bool segments_properly_intersect(Point a, Point b, Point c, Point d) {
    double d1 = cross(b - a, c - a);
    double d2 = cross(b - a, d - a);
    double d3 = cross(d - c, a - c);
    double d4 = cross(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

Polygon make_polygon(std::vector<Point> vertices) {
    if (vertices.size() < 3)
        throw std::invalid_argument("Polygon: needs at least 3 vertices");
    for (const Point& p : vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("Polygon: non-finite coordinate");
    }
    if (signed_area(vertices) <= 0.0)
        throw std::invalid_argument("Polygon: vertices must be counterclockwise with positive area");
    std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Adjacent edges share an endpoint; skip those pairs.
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (segments_properly_intersect(vertices[i], vertices[(i + 1) % n],
                                            vertices[j], vertices[(j + 1) % n]))
                throw std::invalid_argument("Polygon: self-intersecting boundary");
        }
    }
    return Polygon{std::move(vertices)};
}

double polygon_area(const Polygon& p) {
    if (p.vertices.size() < 3)
        throw std::invalid_argument("polygon_area: degenerate polygon");
    double area = signed_area(p.vertices);
    if (area <= 0.0)
        throw std::invalid_argument("polygon_area: clockwise or degenerate polygon");
    return area;
}

Polygon regular_polygon(int n, double side, Point center, double rotation) {
    if (n < 3) throw std::domain_error("regular_polygon: n must be at least 3");
    if (!(side > 0.0)) throw std::domain_error("regular_polygon: side must be positive");
    double radius = side / (2.0 * std::sin(std::numbers::pi / n));
    std::vector<Point> vertices;
    vertices.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double angle = rotation + 2.0 * std::numbers::pi * i / n;
        vertices.push_back({center.x + radius * std::cos(angle),
                            center.y + radius * std::sin(angle)});
    }
    return Polygon{std::move(vertices)};
}

bool point_in_polygon(Point p, const Polygon& poly) {
    bool inside = false;
    std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertices[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            double x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_at) inside = !inside;
        }
    }
    return inside;
}

double distance_to_boundary(Point p, const Polygon& poly) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point a = poly.vertices[i];
        Point b = poly.vertices[(i + 1) % n];
        Point ab = b - a;
        double len2 = dot(ab, ab);
        double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, distance(p, a + t * ab));
    }
    return best;
}

bool point_in_or_near(Point p, const Polygon& poly, double eps) {
    return point_in_polygon(p, poly) || distance_to_boundary(p, poly) <= eps;
}

}  // namespace grat::geom
