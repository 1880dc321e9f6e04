#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "grat/carpets.hpp"
#include "grat/coverage.hpp"
#include "grat/gratcore.hpp"
#include "grat/render.hpp"
#include "grat/sceneio.hpp"
#include "grat/tilings.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success / identity holds, 1 mathematical check failed,
// 2 usage or domain error.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

json bigint_to_json(const grat::BigInt& v) {
    // Numbers that survive a double round-trip stay numeric; larger values
    // are emitted as decimal strings.
    if (v.fits_int64()) {
        long long x = v.to_int64();
        if (x <= (1ll << 53) && x >= -(1ll << 53)) return json(x);
    }
    return json(v.to_decimal());
}

grat::BigInt parse_bigint(const std::string& text, const char* what) {
    try {
        return grat::BigInt::from_decimal(text);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + " must be an integer, got \"" + text +
                                    "\"");
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << contents;
}

json grationality_json(const grat::BigInt& n) {
    grat::GrationalityResult result = grat::is_grational(n);
    json obj;
    obj["n"] = bigint_to_json(n);
    obj["grational"] = result.grational;
    if (result.witness) {
        obj["witness"] = json::array(
            {bigint_to_json(result.witness->a), bigint_to_json(result.witness->b)});
    } else {
        obj["witness"] = nullptr;
    }
    return obj;
}

int run_check(const std::string& n_text, const std::string& range_text, bool as_json) {
    if (!range_text.empty()) {
        auto dots = range_text.find("..");
        if (dots == std::string::npos)
            throw std::invalid_argument("--range expects LO..HI, got \"" + range_text + "\"");
        grat::BigInt lo = parse_bigint(range_text.substr(0, dots), "range low");
        grat::BigInt hi = parse_bigint(range_text.substr(dots + 2), "range high");
        json rows = json::array();
        for (grat::BigInt n = lo; n <= hi; n += 1) rows.push_back(grationality_json(n));
        if (as_json) {
            std::cout << rows.dump() << "\n";
        } else {
            for (const json& row : rows) {
                std::cout << row["n"] << (row["grational"].get<bool>() ? " grational" : " not grational")
                          << "\n";
            }
        }
        return kOk;
    }
    grat::BigInt n = parse_bigint(n_text, "n");
    json obj = grationality_json(n);
    obj.erase("n");
    if (as_json) {
        std::cout << obj.dump() << "\n";
    } else if (obj["grational"].get<bool>()) {
        std::cout << n.to_decimal() << " is grational; witness (" << obj["witness"][0] << ", "
                  << obj["witness"][1] << ")\n";
    } else {
        std::cout << n.to_decimal() << " is not grational\n";
    }
    return kOk;
}

int run_descend(const std::string& n_text, const std::string& a_text, const std::string& b_text,
                const std::string& strategy_name, int max_steps, bool as_json) {
    grat::BigInt n = parse_bigint(n_text, "n");
    grat::BigInt a = parse_bigint(a_text, "a");
    grat::BigInt b = parse_bigint(b_text, "b");
    grat::DescentStrategy strategy = grat::DescentStrategy::parse(strategy_name);
    grat::CandidatePair start(n, a, b);
    grat::DescentChain chain = grat::descent_chain(start, strategy, max_steps);

    json obj;
    obj["n"] = bigint_to_json(n);
    obj["strategy"] = strategy.name();
    obj["chain"] = json::array();
    for (const grat::CandidatePair& pair : chain.steps) {
        obj["chain"].push_back(json{{"a", bigint_to_json(pair.a)},
                                    {"b", bigint_to_json(pair.b)},
                                    {"defect", bigint_to_json(pair.defect)}});
    }
    obj["reason"] = chain.reason == grat::DescentChain::Reason::MaxSteps ? "max-steps"
                                                                         : "precondition-failed";
    if (!chain.failed_inequality.empty()) obj["failed_inequality"] = chain.failed_inequality;
    if (as_json) {
        std::cout << obj.dump() << "\n";
    } else {
        for (const grat::CandidatePair& pair : chain.steps) {
            std::cout << "(" << pair.a << ", " << pair.b << ") defect " << pair.defect << "\n";
        }
        std::cout << "stopped: " << obj["reason"].get<std::string>();
        if (!chain.failed_inequality.empty()) std::cout << " (" << chain.failed_inequality << ")";
        std::cout << "\n";
    }
    return kOk;
}

json coverage_json(const grat::geom::CoverageReport& report) {
    json obj;
    json by_depth = json::object();
    for (const auto& [depth, area] : report.area_by_depth) {
        by_depth[std::to_string(depth)] = area;
    }
    obj["area_by_depth"] = by_depth;
    obj["room_area"] = report.room_area;
    obj["carpet_area_total"] = report.carpet_area_total;
    obj["uncovered"] = report.uncovered;
    obj["excess"] = report.excess;
    obj["residual"] = report.residual;
    return obj;
}

int run_overlay(int n, bool exact_ratio, const std::vector<double>& sides,
                const std::string& render_path, bool as_json, bool as_json_scene,
                double tolerance) {
    double room_side, carpet_side;
    if (exact_ratio) {
        carpet_side = 1.0;
        room_side = std::sqrt(static_cast<double>(n));
    } else if (sides.size() == 2) {
        room_side = sides[0];
        carpet_side = sides[1];
    } else {
        throw std::invalid_argument("overlay: pass --exact-ratio or --sides A B");
    }
    (void)tolerance;
    grat::carpets::OverlayScene scene = grat::carpets::corner_overlay(n, room_side, carpet_side);
    grat::carpets::IdentityReport report = grat::carpets::overlay_identity_check(scene);

    if (!render_path.empty()) {
        grat::svg::SceneDoc doc =
            grat::scene::doc_from_coverage(scene.arrangement, scene.coverage);
        write_file(render_path, grat::svg::render_svg(doc));
    }
    if (as_json_scene) {
        std::cout << grat::scene::scene_to_json(grat::scene::scene_from_overlay(scene)) << "\n";
    } else if (as_json) {
        json obj;
        obj["n"] = n;
        obj["room_side"] = room_side;
        obj["carpet_side"] = carpet_side;
        obj["doubly"] = report.doubly_regions;
        obj["uncovered"] = report.uncovered_regions;
        obj["uncovered_area"] = report.uncovered_area;
        obj["excess_area"] = report.excess_area;
        obj["residual"] = report.residual;
        obj["identity"] = report.identity_holds;
        obj["census_matches"] = report.census_matches;
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << "n=" << n << ": " << report.doubly_regions << " doubly covered, "
                  << report.uncovered_regions << " uncovered regions; uncovered area "
                  << report.uncovered_area << ", excess " << report.excess_area << "\n";
    }
    if (!report.pass()) {
        std::cerr << "overlay identity/census check failed: " << report.detail << "\n";
        return kCheckFailed;
    }
    return kOk;
}

int run_carpets(const std::string& scene_path, bool as_json, std::optional<double> tolerance,
                const std::string& render_path) {
    std::ifstream in(scene_path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read scene file " + scene_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    grat::scene::SceneFile scene = grat::scene::parse_scene(buffer.str());
    if (tolerance) scene.tolerance = *tolerance;  // the flag wins over the file
    grat::geom::Arrangement arrangement = grat::scene::to_arrangement(scene);
    grat::geom::CoverageReport report = grat::geom::coverage_depth(arrangement);

    if (!render_path.empty()) {
        write_file(render_path,
                   grat::svg::render_svg(grat::scene::doc_from_coverage(arrangement, report)));
    }
    if (as_json) {
        std::cout << coverage_json(report).dump() << "\n";
    } else {
        std::cout << "room " << report.room_area << ", carpets " << report.carpet_area_total
                  << ", uncovered " << report.uncovered << ", excess " << report.excess
                  << ", residual " << report.residual << "\n";
    }
    return std::abs(report.residual) <= scene.tolerance ? kOk : kCheckFailed;
}

int run_tile(const std::vector<std::string>& spec, const std::string& render_path,
             bool as_json) {
    if (spec.empty()) throw std::invalid_argument("tile: expected triangle|ngon|rows");
    const std::string& kind = spec[0];
    json obj;
    grat::svg::SceneDoc doc;
    bool have_doc = false;

    if (kind == "triangle") {
        if (spec.size() != 2) throw std::invalid_argument("tile triangle K");
        int k = std::stoi(spec[1]);
        auto placements = grat::tiles::tile_triangle(k, 2.0 * 3.141592653589793 / 9.0);
        std::vector<long long> rows(static_cast<std::size_t>(k), 0);
        for (const auto& p : placements) rows[static_cast<std::size_t>(p.row - 1)] += 1;
        obj["count"] = placements.size();
        obj["rows"] = rows;
        grat::tiles::UnitTriangle unit = grat::tiles::UnitTriangle::for_ngon(9);
        if (!render_path.empty()) {
            grat::geom::Polygon outline{{{0.0, 0.0},
                                         {-k / 2.0, -k * unit.height},
                                         {k / 2.0, -k * unit.height}}};
            doc = grat::scene::doc_from_tiling(outline, placements, unit);
            have_doc = true;
        }
    } else if (kind == "ngon") {
        if (spec.size() != 3) throw std::invalid_argument("tile ngon N SIDE");
        int n = std::stoi(spec[1]);
        int side = std::stoi(spec[2]);
        grat::tiles::NgonAssembly assembly = grat::tiles::assemble_ngon(n, side);
        obj["wedges"] = assembly.unit_wedge_count;
        obj["area"] = grat::geom::polygon_area(assembly.polygon);
        if (!render_path.empty()) {
            doc = grat::scene::doc_from_tiling(assembly.polygon, assembly.wedges, assembly.unit);
            have_doc = true;
        }
    } else if (kind == "rows") {
        if (spec.size() != 4) throw std::invalid_argument("tile rows N A B");
        grat::BigInt n = parse_bigint(spec[1], "n");
        grat::BigInt a = parse_bigint(spec[2], "a");
        grat::BigInt b = parse_bigint(spec[3], "b");
        grat::tiles::RowTilingReport report = grat::tiles::row_tile(n, a, b);
        obj["k"] = bigint_to_json(report.k);
        obj["lambda"] = report.lambda.to_string();
        obj["total"] = bigint_to_json(report.total_carpets);
        json rows = json::array();
        for (const grat::BigInt& r : report.carpets_per_row) rows.push_back(bigint_to_json(r));
        obj["carpets_per_row"] = rows;
        obj["n_is_k_squared"] = report.n_is_k_squared;
    } else {
        throw std::invalid_argument("tile: unknown kind \"" + kind + "\"");
    }

    if (!render_path.empty() && have_doc) {
        write_file(render_path, grat::svg::render_svg(doc));
    }
    if (as_json) {
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << obj.dump(2) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grationality toolkit: decision procedure, descent, carpet scenes, tilings"};
    app.require_subcommand(1);

    // check
    std::string check_n, check_range;
    bool check_json = false;
    CLI::App* check = app.add_subcommand("check", "decide grationality of n");
    check->add_option("n", check_n, "side count to test");
    check->add_option("--range", check_range, "evaluate a whole range LO..HI");
    check->add_flag("--json", check_json, "emit JSON");

    // descend
    std::string d_n, d_a, d_b, d_strategy;
    int d_max_steps = 64;
    bool d_json = false;
    CLI::App* descend = app.add_subcommand("descend", "run a descent chain from (a, b)");
    descend->add_option("n", d_n)->required();
    descend->add_option("a", d_a)->required();
    descend->add_option("b", d_b)->required();
    descend->add_option("strategy", d_strategy, "paper3 | paper5 | generic")->required();
    descend->add_option("--max-steps", d_max_steps, "maximum number of steps");
    descend->add_flag("--json", d_json, "emit JSON");

    // overlay
    int o_n = 0;
    bool o_exact = false, o_json = false, o_json_scene = false;
    std::vector<double> o_sides;
    std::string o_render;
    double o_tolerance = 1e-9;
    CLI::App* overlay = app.add_subcommand("overlay", "corner overlay scene and identity check");
    overlay->add_option("n", o_n)->required();
    overlay->add_flag("--exact-ratio", o_exact, "room sqrt(n), carpet 1");
    overlay->add_option("--sides", o_sides, "room and carpet side")->expected(2);
    overlay->add_option("--render", o_render, "write an SVG");
    overlay->add_flag("--json", o_json, "emit the census as JSON");
    overlay->add_flag("--json-scene", o_json_scene, "emit the scene file JSON");
    overlay->add_option("--tolerance", o_tolerance, "coverage tolerance");

    // carpets
    std::string c_scene, c_render;
    bool c_json = false;
    double c_tolerance = -1.0;
    CLI::App* carpets_cmd = app.add_subcommand("carpets", "coverage-depth report for a scene file");
    carpets_cmd->add_option("scene", c_scene, "scene JSON path")->required();
    carpets_cmd->add_flag("--json", c_json, "emit JSON");
    carpets_cmd->add_option("--tolerance", c_tolerance, "overrides the scene tolerance");
    carpets_cmd->add_option("--render", c_render, "write an SVG");

    // tile
    std::vector<std::string> t_spec;
    std::string t_render;
    bool t_json = false;
    CLI::App* tile = app.add_subcommand("tile", "triangle K | ngon N SIDE | rows N A B");
    tile->add_option("spec", t_spec, "tiling kind and parameters")->expected(-1);
    tile->add_option("--render", t_render, "write an SVG");
    tile->add_flag("--json", t_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed()) {
            if (check_n.empty() && check_range.empty())
                throw std::invalid_argument("check: pass n or --range LO..HI");
            return run_check(check_n, check_range, check_json);
        }
        if (descend->parsed())
            return run_descend(d_n, d_a, d_b, d_strategy, d_max_steps, d_json);
        if (overlay->parsed())
            return run_overlay(o_n, o_exact, o_sides, o_render, o_json, o_json_scene,
                               o_tolerance);
        if (carpets_cmd->parsed()) {
            std::optional<double> tol;
            if (c_tolerance > 0.0) tol = c_tolerance;
            return run_carpets(c_scene, c_json, tol, c_render);
        }
        if (tile->parsed()) return run_tile(t_spec, t_render, t_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
