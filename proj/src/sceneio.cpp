#include "grat/sceneio.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace grat::scene {

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* name : allowed) {
            if (item.key() == name) {
                known = true;
                break;
            }
        }
        if (!known)
            throw std::invalid_argument("scene: unknown field \"" + item.key() + "\" in " +
                                        where);
    }
}

ShapeSpec parse_shape(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw std::invalid_argument("scene: " + where + " must be an object");
    reject_unknown_fields(obj, {"n", "side", "center", "rotation"}, where);
    ShapeSpec shape;
    if (!obj.contains("n") || !obj["n"].is_number_integer())
        throw std::invalid_argument("scene: missing or non-integer \"n\" in " + where);
    shape.n = obj["n"].get<int>();
    if (!obj.contains("side") || !obj["side"].is_number())
        throw std::invalid_argument("scene: missing or non-numeric \"side\" in " + where);
    shape.side = obj["side"].get<double>();
    if (obj.contains("center")) {
        const json& c = obj["center"];
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw std::invalid_argument("scene: \"center\" must be [x, y] in " + where);
        shape.center = {c[0].get<double>(), c[1].get<double>()};
    }
    if (obj.contains("rotation")) {
        if (!obj["rotation"].is_number())
            throw std::invalid_argument("scene: non-numeric \"rotation\" in " + where);
        shape.rotation = obj["rotation"].get<double>();
    }
    return shape;
}

json shape_to_json(const ShapeSpec& shape) {
    return json{{"n", shape.n},
                {"side", shape.side},
                {"center", {shape.center.x, shape.center.y}},
                {"rotation", shape.rotation}};
}

}  // namespace

SceneFile parse_scene(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scene: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("scene: top level must be an object");
    reject_unknown_fields(doc, {"room", "carpets", "tolerance"}, "scene");
    if (!doc.contains("room")) throw std::invalid_argument("scene: missing \"room\"");

    SceneFile scene;
    scene.room = parse_shape(doc["room"], "room");
    if (doc.contains("carpets")) {
        if (!doc["carpets"].is_array())
            throw std::invalid_argument("scene: \"carpets\" must be an array");
        std::size_t index = 0;
        for (const json& entry : doc["carpets"]) {
            scene.carpets.push_back(parse_shape(entry, "carpets[" + std::to_string(index) + "]"));
            ++index;
        }
    }
    if (doc.contains("tolerance")) {
        if (!doc["tolerance"].is_number() || !(doc["tolerance"].get<double>() > 0.0))
            throw std::invalid_argument("scene: \"tolerance\" must be a positive number");
        scene.tolerance = doc["tolerance"].get<double>();
    }
    return scene;
}

std::string scene_to_json(const SceneFile& scene) {
    json doc;
    doc["room"] = shape_to_json(scene.room);
    doc["carpets"] = json::array();
    for (const ShapeSpec& carpet : scene.carpets) doc["carpets"].push_back(shape_to_json(carpet));
    doc["tolerance"] = scene.tolerance;
    return doc.dump(2);
}

geom::Arrangement to_arrangement(const SceneFile& scene) {
    geom::Polygon room =
        geom::regular_polygon(scene.room.n, scene.room.side, scene.room.center,
                              scene.room.rotation);
    std::vector<geom::Polygon> carpets;
    carpets.reserve(scene.carpets.size());
    for (const ShapeSpec& spec : scene.carpets) {
        carpets.push_back(geom::regular_polygon(spec.n, spec.side, spec.center, spec.rotation));
    }
    return geom::make_arrangement(std::move(room), std::move(carpets), scene.tolerance);
}

SceneFile scene_from_overlay(const carpets::OverlayScene& overlay) {
    SceneFile scene;
    double rotation = -std::numbers::pi / 2 - std::numbers::pi / overlay.n;
    scene.room = ShapeSpec{overlay.n, overlay.room_side, {0, 0}, rotation};
    scene.tolerance = overlay.arrangement.tolerance;
    // Carpets are homothetic room copies; each keeps the room's rotation with
    // its center pulled toward the anchoring room vertex.
    double ratio = overlay.carpet_side / overlay.room_side;
    for (const geom::Polygon& carpet : overlay.arrangement.carpets) {
        geom::Point center{0, 0};
        for (const geom::Point& v : carpet.vertices) center = center + v;
        center = (1.0 / static_cast<double>(carpet.vertices.size())) * center;
        (void)ratio;
        scene.carpets.push_back(ShapeSpec{overlay.n, overlay.carpet_side, center, rotation});
    }
    return scene;
}

svg::SceneDoc doc_from_coverage(const geom::Arrangement& arr,
                                const geom::CoverageReport& report) {
    svg::SceneDoc doc;
    for (const geom::Polygon& carpet : arr.carpets) {
        doc.shapes.push_back({svg::ShapeRole::Carpet, 0, 0, {carpet.vertices}, ""});
    }
    int index = 0;
    for (const geom::DepthRegion& region : report.regions) {
        if (region.depth == 1) continue;  // singly covered floor stays carpet-colored
        svg::Shape shape;
        shape.role = svg::ShapeRole::DepthRegion;
        shape.depth = region.depth;
        shape.loops.push_back(region.outer);
        for (const auto& hole : region.holes) shape.loops.push_back(hole);
        shape.label = "d" + std::to_string(region.depth) + "#" + std::to_string(++index);
        doc.shapes.push_back(std::move(shape));
    }
    doc.shapes.push_back({svg::ShapeRole::Room, 0, 0, {arr.room.vertices}, ""});
    return doc;
}

svg::SceneDoc doc_from_tiling(const geom::Polygon& outline,
                              const std::vector<tiles::TrianglePlacement>& placements,
                              const tiles::UnitTriangle& unit) {
    svg::SceneDoc doc;
    for (const tiles::TrianglePlacement& placement : placements) {
        auto corners = tiles::placement_vertices(placement, unit);
        svg::Shape shape;
        shape.role = svg::ShapeRole::Tile;
        shape.shade = placement.orientation == tiles::Orientation::Down ? 1 : 0;
        shape.loops.push_back({corners.begin(), corners.end()});
        doc.shapes.push_back(std::move(shape));
    }
    doc.shapes.push_back({svg::ShapeRole::Room, 0, 0, {outline.vertices}, ""});
    return doc;
}

namespace {

void append_assembly(svg::SceneDoc& doc, const tiles::NgonAssembly& assembly) {
    geom::Point center{0, 0};
    for (const geom::Point& v : assembly.polygon.vertices) center = center + v;
    center = (1.0 / static_cast<double>(assembly.polygon.vertices.size())) * center;
    for (const tiles::TrianglePlacement& placement : assembly.wedges) {
        auto corners = tiles::placement_vertices(placement, assembly.unit);
        svg::Shape shape;
        shape.role = svg::ShapeRole::Tile;
        shape.shade = placement.orientation == tiles::Orientation::Down ? 1 : 0;
        std::vector<geom::Point> loop;
        for (const geom::Point& p : corners) loop.push_back(p + center);
        shape.loops.push_back(std::move(loop));
        doc.shapes.push_back(std::move(shape));
    }
    doc.shapes.push_back({svg::ShapeRole::Room, 0, 0, {assembly.polygon.vertices}, ""});
}

}  // namespace

svg::SceneDoc doc_from_theorem2(const tiles::Theorem2Scene& scene) {
    svg::SceneDoc doc;
    append_assembly(doc, scene.room);
    for (const tiles::NgonAssembly& carpet : scene.carpets) append_assembly(doc, carpet);
    return doc;
}

}  // namespace grat::scene
