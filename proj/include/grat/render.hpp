#pragma once

#include <string>
#include <vector>

#include "grat/geom.hpp"

namespace grat::svg {

enum class ShapeRole { Room, Carpet, DepthRegion, Tile };

struct Shape {
    ShapeRole role = ShapeRole::Room;
    int depth = 0;  // DepthRegion: coverage depth, drives the fill color
    int shade = 0;  // Tile: 0/1 alternating fill
    std::vector<std::vector<geom::Point>> loops;  // loops[0] outer, rest holes
    std::string label;
};

struct SceneDoc {
    std::vector<Shape> shapes;
};

struct RenderOptions {
    std::vector<std::string> depth_palette;  // overrides the built-in palette
    double stroke_width = 0.01;
    bool show_labels = false;
};

/// Deterministic SVG 1.1 text: identical input yields byte-identical output
/// (fixed shape order, 9-significant-digit coordinates, no locale use).
std::string render_svg(const SceneDoc& doc, const RenderOptions& options = {});

}  // namespace grat::svg
