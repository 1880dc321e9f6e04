#include "grat/coverage.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace grat::geom {

Arrangement make_arrangement(Polygon room, std::vector<Polygon> carpets, double tolerance) {
    if (room.vertices.size() < 3 || signed_area(room.vertices) <= 0.0)
        throw std::invalid_argument("Arrangement: invalid room polygon");
    for (std::size_t i = 0; i < carpets.size(); ++i) {
        const Polygon& carpet = carpets[i];
        if (carpet.vertices.size() < 3 || signed_area(carpet.vertices) <= 0.0)
            throw std::invalid_argument("Arrangement: invalid carpet polygon");
        for (const Point& v : carpet.vertices) {
            if (!point_in_or_near(v, room, tolerance))
                throw std::invalid_argument("Arrangement: carpet " + std::to_string(i) +
                                            " extends outside the room");
        }
    }
    return Arrangement{std::move(room), std::move(carpets), tolerance};
}

double CoverageReport::area_at_depth(int depth) const {
    auto it = area_by_depth.find(depth);
    return it == area_by_depth.end() ? 0.0 : it->second;
}

int CoverageReport::regions_at_depth(int depth) const {
    int count = 0;
    for (const DepthRegion& r : regions) count += r.depth == depth ? 1 : 0;
    return count;
}

int CoverageReport::multiply_covered_regions() const {
    int count = 0;
    for (const DepthRegion& r : regions) count += r.depth >= 2 ? 1 : 0;
    return count;
}

CoverageReport coverage_depth(const Arrangement& arr) {
    std::vector<Polygon> layers;
    layers.reserve(arr.carpets.size() + 1);
    layers.push_back(arr.room);
    for (const Polygon& carpet : arr.carpets) layers.push_back(carpet);

    // Depth of a face is the number of carpets containing its sample point;
    // faces outside the room are discarded.
    ClassifyFn classify = [](const std::vector<bool>& m) {
        if (!m[0]) return -1;
        int depth = 0;
        for (std::size_t i = 1; i < m.size(); ++i) depth += m[i] ? 1 : 0;
        return depth;
    };
    OverlayOptions options;
    options.eps = arr.tolerance;
    OverlayResult overlay_result = overlay(layers, classify, options);

    CoverageReport report;
    report.diagnostics = overlay_result.diagnostics;
    report.area_by_depth = std::move(overlay_result.area_by_key);
    report.room_area = polygon_area(arr.room);
    for (const Polygon& carpet : arr.carpets) report.carpet_area_total += polygon_area(carpet);

    report.uncovered = report.area_at_depth(0);
    for (const auto& [depth, area] : report.area_by_depth) {
        if (depth >= 2) report.excess += (depth - 1) * area;
    }
    report.residual =
        report.uncovered - report.excess - (report.room_area - report.carpet_area_total);

    for (OverlayFace& face : overlay_result.faces) {
        DepthRegion region;
        region.depth = face.key;
        region.area = face.area;
        region.sample = face.sample;
        region.outer = std::move(face.loops.front());
        for (std::size_t i = 1; i < face.loops.size(); ++i)
            region.holes.push_back(std::move(face.loops[i]));
        report.regions.push_back(std::move(region));
    }
    std::stable_sort(report.regions.begin(), report.regions.end(),
                     [](const DepthRegion& a, const DepthRegion& b) {
                         if (a.depth != b.depth) return a.depth < b.depth;
                         return a.area > b.area;
                     });
    return report;
}

std::vector<double> region_edge_lengths(const DepthRegion& region) {
    std::vector<double> lengths;
    std::size_t n = region.outer.size();
    lengths.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        lengths.push_back(distance(region.outer[i], region.outer[(i + 1) % n]));
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace grat::geom
