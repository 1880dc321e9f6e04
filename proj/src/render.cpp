#include "grat/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace grat::svg {

namespace {

// Depth 0 is white (uncarpeted), 1 neutral, >= 2 accent shades per extra layer.
const char* kDefaultDepthPalette[] = {"#ffffff", "#c9d4de", "#e08f6a",
                                      "#c85c3c", "#a03b22", "#6f2413"};

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string path_data(const std::vector<std::vector<geom::Point>>& loops) {
    std::string d;
    for (const auto& loop : loops) {
        for (std::size_t i = 0; i < loop.size(); ++i) {
            d += i == 0 ? "M " : "L ";
            d += fmt(loop[i].x);
            d += ' ';
            d += fmt(loop[i].y);
            d += ' ';
        }
        d += "Z ";
    }
    if (!d.empty()) d.pop_back();
    return d;
}

std::string depth_color(int depth, const RenderOptions& options) {
    if (!options.depth_palette.empty()) {
        std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(std::max(depth, 0)),
                                                options.depth_palette.size() - 1);
        return options.depth_palette[idx];
    }
    constexpr std::size_t count = std::size(kDefaultDepthPalette);
    std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(std::max(depth, 0)),
                                            count - 1);
    return kDefaultDepthPalette[idx];
}

}  // namespace

std::string render_svg(const SceneDoc& doc, const RenderOptions& options) {
    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool any = false;
    for (const Shape& shape : doc.shapes) {
        for (const auto& loop : shape.loops) {
            for (const geom::Point& p : loop) {
                if (!any) {
                    xlo = xhi = p.x;
                    ylo = yhi = p.y;
                    any = true;
                } else {
                    xlo = std::min(xlo, p.x);
                    xhi = std::max(xhi, p.x);
                    ylo = std::min(ylo, p.y);
                    yhi = std::max(yhi, p.y);
                }
            }
        }
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (!any) {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
               "viewBox=\"0 0 1 1\">\n"
               "<!-- empty viewport -->\n"
               "</svg>\n";
        return out.str();
    }

    double margin = 0.05 * std::max(xhi - xlo, yhi - ylo);
    if (margin == 0.0) margin = 0.05;
    double vx = xlo - margin;
    double vy = -(yhi + margin);  // scene y points up; SVG y points down
    double vw = (xhi - xlo) + 2 * margin;
    double vh = (yhi - ylo) + 2 * margin;

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt(vx) << ' ' << fmt(vy) << ' ' << fmt(vw) << ' ' << fmt(vh)
        << "\" width=\"640\" height=\"" << fmt(640.0 * vh / vw) << "\">\n";
    out << "<g transform=\"scale(1 -1)\" stroke=\"#1f2430\" stroke-width=\""
        << fmt(options.stroke_width) << "\" stroke-linejoin=\"round\">\n";

    for (const Shape& shape : doc.shapes) {
        std::string fill;
        std::string cls;
        std::string extra;
        switch (shape.role) {
            case ShapeRole::Room:
                fill = "none";
                cls = "room";
                break;
            case ShapeRole::Carpet:
                fill = "#9ec5e8";
                cls = "carpet";
                extra = " fill-opacity=\"0.45\"";
                break;
            case ShapeRole::DepthRegion:
                fill = depth_color(shape.depth, options);
                cls = "depth-region depth-" + std::to_string(shape.depth);
                break;
            case ShapeRole::Tile:
                fill = shape.shade % 2 == 0 ? "#f1e3c8" : "#d9b98a";
                cls = "tile";
                break;
        }
        out << "<path class=\"" << cls << "\" fill=\"" << fill << "\"" << extra
            << " fill-rule=\"evenodd\" d=\"" << path_data(shape.loops) << "\"/>\n";
        if (options.show_labels && !shape.label.empty() && !shape.loops.empty() &&
            !shape.loops[0].empty()) {
            geom::Point anchor{0, 0};
            for (const geom::Point& p : shape.loops[0]) anchor = anchor + p;
            anchor = (1.0 / static_cast<double>(shape.loops[0].size())) * anchor;
            out << "<text transform=\"scale(1 -1)\" x=\"" << fmt(anchor.x) << "\" y=\""
                << fmt(-anchor.y) << "\" font-size=\"" << fmt(8 * options.stroke_width)
                << "\" stroke=\"none\" fill=\"#1f2430\">" << shape.label << "</text>\n";
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace grat::svg
