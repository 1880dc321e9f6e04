#include "grat/overlay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace grat::geom {

namespace {

// Fixed generic rotation applied to every input before decomposition so no
// edge is vertical; undone on output. Not a rational multiple of pi, so the
// axis-aligned and 2*pi/n scene families stay clear of the bad set.
constexpr double kShieldAngle = 0.123456789;

struct SplitPoint {
    double t;
    Point p;
};

struct RawEdge {
    Point a, b;
    std::vector<SplitPoint> splits;
};

// Deterministic eps-clustering of points on a uniform grid.
class Snapper {
public:
    explicit Snapper(double radius) : radius_(radius) {}

    int snap(Point p) {
        long long ix = static_cast<long long>(std::floor(p.x / radius_));
        long long iy = static_cast<long long>(std::floor(p.y / radius_));
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = grid_.find(key(ix + dx, iy + dy));
                if (it == grid_.end()) continue;
                for (int idx : it->second) {
                    if (distance(reps_[idx], p) <= radius_) return idx;
                }
            }
        }
        int idx = static_cast<int>(reps_.size());
        reps_.push_back(p);
        grid_[key(ix, iy)].push_back(idx);
        return idx;
    }

    const std::vector<Point>& reps() const { return reps_; }

private:
    static std::uint64_t key(long long ix, long long iy) {
        return (static_cast<std::uint64_t>(ix) << 32) ^
               (static_cast<std::uint64_t>(iy) & 0xffffffffull);
    }

    double radius_;
    std::vector<Point> reps_;
    std::unordered_map<std::uint64_t, std::vector<int>> grid_;
};

struct UniqueEdge {
    int u, v;  // rep indices, x(u) < x(v)
};

double eval_y(const Point& a, const Point& b, double x) {
    if (x == a.x) return a.y;
    if (x == b.x) return b.y;
    double t = (x - a.x) / (b.x - a.x);
    return a.y + t * (b.y - a.y);
}

struct Cell {
    int slab = 0;
    int gap = 0;  // index within the slab's gap list
    int key = 0;
    double area = 0.0;
    Point mid{};
    // corner y values: lo/hi edge evaluated at the slab's xl and xr
    double yl_lo = 0, yl_hi = 0, yr_lo = 0, yr_hi = 0;
    int lo_edge = -1, hi_edge = -1;
};

struct DSU {
    std::vector<int> parent;
    explicit DSU(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct Edgelet {
    Point from, to;
};

struct PointKey {
    double x, y;
    bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
    std::size_t operator()(const PointKey& k) const {
        std::hash<double> h;
        return h(k.x) * 1000003u ^ h(k.y);
    }
};

double angle_of(Point d) { return std::atan2(d.y, d.x); }

// Chains directed edgelets (face on the left) into closed loops. At branch
// vertices continues with the outgoing edgelet next in clockwise order from
// the reversed incoming direction, which keeps the interior wedge empty.
std::vector<std::vector<Point>> walk_loops(std::vector<Edgelet> edgelets) {
    std::unordered_map<PointKey, std::vector<int>, PointKeyHash> outgoing;
    for (std::size_t i = 0; i < edgelets.size(); ++i) {
        outgoing[{edgelets[i].from.x, edgelets[i].from.y}].push_back(static_cast<int>(i));
    }
    std::vector<bool> used(edgelets.size(), false);
    std::vector<std::vector<Point>> loops;
    constexpr double kTwoPi = 6.283185307179586476925;

    for (std::size_t start = 0; start < edgelets.size(); ++start) {
        if (used[start]) continue;
        std::vector<Point> loop;
        int cur = static_cast<int>(start);
        Point origin = edgelets[start].from;
        while (true) {
            used[cur] = true;
            loop.push_back(edgelets[cur].from);
            Point end = edgelets[cur].to;
            if (end.x == origin.x && end.y == origin.y) break;
            auto it = outgoing.find({end.x, end.y});
            if (it == outgoing.end()) break;  // open chain; degenerate face
            int next = -1;
            if (it->second.size() == 1) {
                if (!used[it->second[0]]) next = it->second[0];
            } else {
                Point rev = edgelets[cur].from - end;
                double best = std::numeric_limits<double>::infinity();
                for (int cand : it->second) {
                    if (used[cand]) continue;
                    double turn =
                        std::fmod(angle_of(rev) - angle_of(edgelets[cand].to - end) + 2 * kTwoPi,
                                  kTwoPi);
                    if (turn == 0.0) turn = kTwoPi;
                    if (turn < best) {
                        best = turn;
                        next = cand;
                    }
                }
            }
            if (next < 0) break;
            cur = next;
        }
        if (loop.size() >= 3) loops.push_back(std::move(loop));
    }
    return loops;
}

void simplify_loop(std::vector<Point>& loop) {
    // Drop repeated points, then collinear interior points.
    std::vector<Point> tmp;
    for (const Point& p : loop) {
        if (tmp.empty() || distance(tmp.back(), p) > 1e-14) tmp.push_back(p);
    }
    while (tmp.size() > 1 && distance(tmp.front(), tmp.back()) <= 1e-14) tmp.pop_back();
    std::vector<Point> out;
    std::size_t n = tmp.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point prev = tmp[(i + n - 1) % n];
        Point cur = tmp[i];
        Point next = tmp[(i + 1) % n];
        Point u = cur - prev;
        Point v = next - cur;
        double lu = std::hypot(u.x, u.y);
        double lv = std::hypot(v.x, v.y);
        if (lu == 0.0 || lv == 0.0) continue;
        if (std::abs(cross(u, v)) <= 1e-9 * lu * lv && dot(u, v) > 0.0) continue;
        out.push_back(cur);
    }
    loop = std::move(out);
}

struct Interval {
    double lo, hi;
};

// Subtracts covered sub-intervals from [lo, hi]; returns leftover pieces.
std::vector<Interval> subtract_intervals(double lo, double hi, std::vector<Interval> covered) {
    std::vector<Interval> out;
    std::sort(covered.begin(), covered.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double cursor = lo;
    for (const Interval& c : covered) {
        double clo = std::max(c.lo, lo);
        double chi = std::min(c.hi, hi);
        if (chi <= cursor) continue;
        if (clo > cursor) out.push_back({cursor, clo});
        cursor = std::max(cursor, chi);
    }
    if (cursor < hi) out.push_back({cursor, hi});
    return out;
}

struct BuildResult {
    std::vector<Cell> cells;
    std::vector<std::vector<int>> slab_cells;  // slab -> gap -> cell index or -1
    std::vector<double> xs;
    bool ok = false;
};

BuildResult build_cells(const std::vector<Polygon>& rotated, const ClassifyFn& classify,
                        double eps, double rotation) {
    BuildResult result;

    std::vector<RawEdge> raw;
    for (const Polygon& poly : rotated) {
        std::size_t n = poly.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            Point a = rotate(poly.vertices[i], rotation);
            Point b = rotate(poly.vertices[(i + 1) % n], rotation);
            if (a.x == b.x && a.y == b.y) continue;
            raw.push_back({a, b, {}});
        }
    }

    // Pairwise intersections; share one computed point between both edges so
    // the split endpoints agree bit for bit.
    for (std::size_t i = 0; i < raw.size(); ++i) {
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
            Point d1 = raw[i].b - raw[i].a;
            Point d2 = raw[j].b - raw[j].a;
            double denom = cross(d1, d2);
            double l1 = std::hypot(d1.x, d1.y);
            double l2 = std::hypot(d2.x, d2.y);
            if (std::abs(denom) <= 1e-12 * l1 * l2) {
                // Near-parallel: treat as collinear overlap when both endpoints
                // of one edge sit within eps of the other's line.
                double dist_a = std::abs(cross(d1, raw[j].a - raw[i].a)) / l1;
                double dist_b = std::abs(cross(d1, raw[j].b - raw[i].a)) / l1;
                if (dist_a > eps || dist_b > eps) continue;
                auto project = [](const RawEdge& e, Point p) {
                    Point d = e.b - e.a;
                    return dot(p - e.a, d) / dot(d, d);
                };
                for (Point p : {raw[j].a, raw[j].b}) {
                    double t = project(raw[i], p);
                    if (t > 0.0 && t < 1.0) raw[i].splits.push_back({t, p});
                }
                for (Point p : {raw[i].a, raw[i].b}) {
                    double t = project(raw[j], p);
                    if (t > 0.0 && t < 1.0) raw[j].splits.push_back({t, p});
                }
                continue;
            }
            Point w = raw[j].a - raw[i].a;
            double t1 = cross(w, d2) / denom;
            double t2 = cross(w, d1) / denom;
            double tol1 = eps / l1;
            double tol2 = eps / l2;
            if (t1 < -tol1 || t1 > 1.0 + tol1 || t2 < -tol2 || t2 > 1.0 + tol2) continue;
            Point p = raw[i].a + std::clamp(t1, 0.0, 1.0) * d1;
            raw[i].splits.push_back({std::clamp(t1, 0.0, 1.0), p});
            raw[j].splits.push_back({std::clamp(t2, 0.0, 1.0), p});
        }
    }

    Snapper snapper(eps * 1e-3);
    std::vector<UniqueEdge> edges;
    {
        std::map<std::pair<int, int>, bool> seen;
        for (RawEdge& e : raw) {
            e.splits.push_back({0.0, e.a});
            e.splits.push_back({1.0, e.b});
            std::sort(e.splits.begin(), e.splits.end(),
                      [](const SplitPoint& a, const SplitPoint& b) { return a.t < b.t; });
            int prev = -1;
            for (const SplitPoint& sp : e.splits) {
                int cur = snapper.snap(sp.p);
                if (prev >= 0 && cur != prev) {
                    int u = prev, v = cur;
                    const auto& reps = snapper.reps();
                    if (reps[u].x == reps[v].x) return result;  // vertical: retry rotation
                    if (reps[u].x > reps[v].x) std::swap(u, v);
                    if (!seen.count({u, v})) {
                        seen[{u, v}] = true;
                        edges.push_back({u, v});
                    }
                }
                if (cur != prev) prev = cur;
            }
        }
    }

    const std::vector<Point>& reps = snapper.reps();
    std::vector<double> xs;
    xs.reserve(reps.size());
    for (const Point& p : reps) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // Bounding boxes speed up the per-cell point-in-polygon classification.
    struct BBox {
        double xlo, xhi, ylo, yhi;
    };
    std::vector<BBox> boxes;
    std::vector<Polygon> layers;
    layers.reserve(rotated.size());
    for (const Polygon& poly : rotated) {
        Polygon r;
        r.vertices.reserve(poly.vertices.size());
        for (const Point& p : poly.vertices) r.vertices.push_back(rotate(p, rotation));
        BBox box{1e300, -1e300, 1e300, -1e300};
        for (const Point& p : r.vertices) {
            box.xlo = std::min(box.xlo, p.x);
            box.xhi = std::max(box.xhi, p.x);
            box.ylo = std::min(box.ylo, p.y);
            box.yhi = std::max(box.yhi, p.y);
        }
        boxes.push_back(box);
        layers.push_back(std::move(r));
    }

    std::vector<bool> membership(layers.size());
    result.slab_cells.resize(xs.empty() ? 0 : xs.size() - 1);

    struct Span {
        int edge;
        double yl, yr, ym;
    };
    for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
        double xl = xs[s];
        double xr = xs[s + 1];
        double xm = 0.5 * (xl + xr);
        std::vector<Span> spans;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const Point& a = reps[edges[e].u];
            const Point& b = reps[edges[e].v];
            if (a.x <= xl && b.x >= xr) {
                spans.push_back({static_cast<int>(e), eval_y(a, b, xl), eval_y(a, b, xr),
                                 eval_y(a, b, xm)});
            }
        }
        std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
            if (a.ym != b.ym) return a.ym < b.ym;
            return a.yl < b.yl;
        });
        auto& gaps = result.slab_cells[s];
        gaps.assign(spans.empty() ? 0 : spans.size() - 1, -1);
        for (std::size_t g = 0; g + 1 < spans.size(); ++g) {
            const Span& lo = spans[g];
            const Span& hi = spans[g + 1];
            Point mid{xm, 0.5 * (lo.ym + hi.ym)};
            for (std::size_t layer = 0; layer < layers.size(); ++layer) {
                const BBox& box = boxes[layer];
                membership[layer] = mid.x >= box.xlo && mid.x <= box.xhi &&
                                    mid.y >= box.ylo && mid.y <= box.yhi &&
                                    point_in_polygon(mid, layers[layer]);
            }
            int key = classify(membership);
            if (key < 0) continue;
            Cell cell;
            cell.slab = static_cast<int>(s);
            cell.gap = static_cast<int>(g);
            cell.key = key;
            cell.lo_edge = lo.edge;
            cell.hi_edge = hi.edge;
            cell.yl_lo = lo.yl;
            cell.yl_hi = hi.yl;
            cell.yr_lo = lo.yr;
            cell.yr_hi = hi.yr;
            double hl = std::max(0.0, hi.yl - lo.yl);
            double hr = std::max(0.0, hi.yr - lo.yr);
            cell.area = 0.5 * (hl + hr) * (xr - xl);
            cell.mid = mid;
            gaps[g] = static_cast<int>(result.cells.size());
            result.cells.push_back(cell);
        }
    }
    result.xs = std::move(xs);
    result.ok = true;
    return result;
}

}  // namespace

OverlayResult overlay(std::span<const Polygon> layers, const ClassifyFn& classify,
                      const OverlayOptions& options) {
    const double eps = options.eps;
    std::vector<Polygon> input(layers.begin(), layers.end());

    BuildResult built;
    double rotation = kShieldAngle;
    for (int attempt = 0; attempt < 8; ++attempt) {
        built = build_cells(input, classify, eps, rotation);
        if (built.ok) break;
        rotation += 0.0137;
    }
    if (!built.ok) throw std::runtime_error("overlay: could not find a vertical-free rotation");

    OverlayResult out;
    std::vector<Cell>& cells = built.cells;
    for (const Cell& c : cells) out.area_by_key[c.key] += c.area;

    DSU dsu(cells.size());
    // Within a slab, cells stacked across a shared edge merge when their keys
    // match (the census counts regions of equal depth, so a boundary between
    // equal-depth areas does not split them).
    for (const auto& gaps : built.slab_cells) {
        for (std::size_t g = 0; g + 1 < gaps.size(); ++g) {
            int a = gaps[g];
            int b = gaps[g + 1];
            if (a >= 0 && b >= 0 && cells[a].key == cells[b].key) dsu.unite(a, b);
        }
    }
    // Across slab boundaries, merge equal-key cells whose vertical intervals
    // genuinely overlap; point contact does not connect regions.
    for (std::size_t s = 0; s + 1 < built.slab_cells.size(); ++s) {
        for (int a : built.slab_cells[s]) {
            if (a < 0) continue;
            for (int b : built.slab_cells[s + 1]) {
                if (b < 0) continue;
                double lo = std::max(cells[a].yr_lo, cells[b].yl_lo);
                double hi = std::min(cells[a].yr_hi, cells[b].yl_hi);
                if (hi - lo > eps && cells[a].key == cells[b].key) dsu.unite(a, b);
            }
        }
    }

    std::map<int, std::vector<int>> members;  // face root -> cells
    for (std::size_t i = 0; i < cells.size(); ++i) {
        members[dsu.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    }

    auto cell_at = [&](int slab, int gap) -> int {
        if (slab < 0 || slab >= static_cast<int>(built.slab_cells.size())) return -1;
        const auto& gaps = built.slab_cells[slab];
        if (gap < 0 || gap >= static_cast<int>(gaps.size())) return -1;
        return gaps[gap];
    };

    for (const auto& [root, cell_ids] : members) {
        double area = 0.0;
        const Cell* largest = nullptr;
        for (int id : cell_ids) {
            area += cells[id].area;
            if (!largest || cells[id].area > largest->area) largest = &cells[id];
        }
        if (area < eps * eps) {
            out.diagnostics.dropped_sliver_faces += 1;
            out.diagnostics.dropped_sliver_area += area;
            continue;
        }

        std::vector<Edgelet> edgelets;
        for (int id : cell_ids) {
            const Cell& c = cells[id];
            double xl = built.xs[c.slab];
            double xr = built.xs[c.slab + 1];
            int below = cell_at(c.slab, c.gap - 1);
            if (below < 0 || dsu.find(below) != root) {
                edgelets.push_back({{xl, c.yl_lo}, {xr, c.yr_lo}});
            }
            int above = cell_at(c.slab, c.gap + 1);
            if (above < 0 || dsu.find(above) != root) {
                edgelets.push_back({{xr, c.yr_hi}, {xl, c.yl_hi}});
            }
            // Vertical sides: boundary wherever no same-face neighbor covers.
            std::vector<Interval> covered;
            if (c.slab > 0) {
                for (int n : built.slab_cells[c.slab - 1]) {
                    if (n < 0 || dsu.find(n) != root) continue;
                    covered.push_back({cells[n].yr_lo, cells[n].yr_hi});
                }
            }
            for (const Interval& piece : subtract_intervals(c.yl_lo, c.yl_hi, covered)) {
                if (piece.hi - piece.lo > 1e-14) {
                    edgelets.push_back({{xl, piece.hi}, {xl, piece.lo}});
                }
            }
            covered.clear();
            if (c.slab + 1 < static_cast<int>(built.slab_cells.size())) {
                for (int n : built.slab_cells[c.slab + 1]) {
                    if (n < 0 || dsu.find(n) != root) continue;
                    covered.push_back({cells[n].yl_lo, cells[n].yl_hi});
                }
            }
            for (const Interval& piece : subtract_intervals(c.yr_lo, c.yr_hi, covered)) {
                if (piece.hi - piece.lo > 1e-14) {
                    edgelets.push_back({{xr, piece.lo}, {xr, piece.hi}});
                }
            }
        }

        std::vector<std::vector<Point>> loops = walk_loops(std::move(edgelets));
        for (auto& loop : loops) {
            for (Point& p : loop) p = rotate(p, -rotation);
            simplify_loop(loop);
        }
        std::erase_if(loops, [](const std::vector<Point>& l) { return l.size() < 3; });
        // Outer loop first (largest positive area), holes after.
        std::stable_sort(loops.begin(), loops.end(),
                         [](const std::vector<Point>& a, const std::vector<Point>& b) {
                             return signed_area(a) > signed_area(b);
                         });
        if (loops.empty()) {
            out.diagnostics.dropped_sliver_faces += 1;
            out.diagnostics.dropped_sliver_area += area;
            continue;
        }

        OverlayFace face;
        face.key = largest->key;
        face.area = area;
        face.sample = rotate(largest->mid, -rotation);
        face.loops = std::move(loops);
        out.faces.push_back(std::move(face));
    }
    return out;
}

std::vector<Region> boolean_op(BoolOp op, const Polygon& p, const Polygon& q, double eps,
                               OverlayDiagnostics* diag) {
    if (p.vertices.size() < 3 || signed_area(p.vertices) <= 0.0 ||
        q.vertices.size() < 3 || signed_area(q.vertices) <= 0.0) {
        throw std::invalid_argument("boolean_op: inputs must be counterclockwise simple polygons");
    }
    std::vector<Polygon> layers{p, q};
    ClassifyFn classify;
    switch (op) {
        case BoolOp::Intersection:
            classify = [](const std::vector<bool>& m) { return m[0] && m[1] ? 1 : -1; };
            break;
        case BoolOp::Union:
            classify = [](const std::vector<bool>& m) { return m[0] || m[1] ? 1 : -1; };
            break;
        case BoolOp::Difference:
            classify = [](const std::vector<bool>& m) { return m[0] && !m[1] ? 1 : -1; };
            break;
    }
    OverlayOptions options;
    options.eps = eps;
    OverlayResult result = overlay(layers, classify, options);
    if (diag) diag->merge(result.diagnostics);

    std::vector<Region> regions;
    regions.reserve(result.faces.size());
    for (OverlayFace& face : result.faces) {
        Region region;
        region.area = face.area;
        region.outer = std::move(face.loops.front());
        for (std::size_t i = 1; i < face.loops.size(); ++i) {
            region.holes.push_back(std::move(face.loops[i]));
        }
        regions.push_back(std::move(region));
    }
    return regions;
}

}  // namespace grat::geom
