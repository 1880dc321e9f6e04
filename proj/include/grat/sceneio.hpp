#pragma once

#include <string>
#include <vector>

#include "grat/carpets.hpp"
#include "grat/coverage.hpp"
#include "grat/render.hpp"
#include "grat/tilings.hpp"

namespace grat::scene {

/// One regular polygon in a scene file.
struct ShapeSpec {
    int n = 0;
    double side = 0.0;
    geom::Point center{};
    double rotation = 0.0;
};

/// JSON scene schema:
///   { "room": {"n": int, "side": number, "center": [x, y], "rotation": number},
///     "carpets": [ ...same shape... ],
///     "tolerance": number }        // optional, default 1e-9
/// center and rotation are optional per shape; unknown fields are rejected.
struct SceneFile {
    ShapeSpec room;
    std::vector<ShapeSpec> carpets;
    double tolerance = 1e-9;
};

/// Throws std::invalid_argument naming the offending field.
SceneFile parse_scene(const std::string& json_text);
std::string scene_to_json(const SceneFile& scene);

geom::Arrangement to_arrangement(const SceneFile& scene);

/// Scene file describing a corner overlay, round-trippable through
/// parse_scene/to_arrangement.
SceneFile scene_from_overlay(const carpets::OverlayScene& overlay);

/// Renderable documents.
svg::SceneDoc doc_from_coverage(const geom::Arrangement& arr,
                                const geom::CoverageReport& report);
svg::SceneDoc doc_from_tiling(const geom::Polygon& outline,
                              const std::vector<tiles::TrianglePlacement>& placements,
                              const tiles::UnitTriangle& unit);
svg::SceneDoc doc_from_theorem2(const tiles::Theorem2Scene& scene);

}  // namespace grat::scene
