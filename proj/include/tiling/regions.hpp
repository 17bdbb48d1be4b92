// Concrete graphs: weighted Aztec diamonds, fortress city graphs and the
// brick-lattice graphs B_n, C_n.
#pragma once

#include "tiling/aztec.hpp"
#include "tiling/composition.hpp"
#include "tiling/graph.hpp"
#include "tiling/patterns.hpp"
#include "tiling/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tiling {

namespace detail {

// Vertices keyed by doubled coordinates (2x, 2y).
class PointIndex {
public:
    VertexId at(WeightedGraph& g, long x2, long y2) {
        auto key = std::make_pair(x2, y2);
        auto it = ids_.find(key);
        if (it != ids_.end()) return it->second;
        VertexId id = g.add_vertex(Point{make_rational(x2, 2), make_rational(y2, 2)});
        ids_.emplace(key, id);
        return id;
    }

    bool contains(long x2, long y2) const { return ids_.count({x2, y2}) != 0; }

    VertexId get(long x2, long y2) const { return ids_.at({x2, y2}); }

private:
    std::map<std::pair<long, long>, VertexId> ids_;
};

// Cell (r, c) of AD_n is the unit square centered at (c - r, n - 1 - r - c).
struct CellGeometry {
    long u;
    long v;
    // Doubled coordinates of the four corners.
    std::pair<long, long> top() const { return {2 * u + 1, 2 * v + 1}; }
    std::pair<long, long> east() const { return {2 * u + 1, 2 * v - 1}; }
    std::pair<long, long> bottom() const { return {2 * u - 1, 2 * v - 1}; }
    std::pair<long, long> west() const { return {2 * u - 1, 2 * v + 1}; }
};

inline CellGeometry cell_geometry(std::size_t n, std::size_t r, std::size_t c) {
    const long nn = static_cast<long>(n), rr = static_cast<long>(r), cc = static_cast<long>(c);
    return {cc - rr, nn - 1 - rr - cc};
}

}  // namespace detail

/// The Aztec diamond graph of order n: vertices at half-integer points with
/// |x| + |y| <= n, unit edges. Cell (r, c) with block [x w; y z] of m puts x
/// on its top edge, w on its east edge, y on its west edge and z on its
/// bottom edge (north-east is "top" after the 45 degree rotation). Zero
/// entries give no edge.
inline WeightedGraph build_aztec_graph(std::size_t n, const WeightMatrix& m) {
    if (m.order() != n) throw std::invalid_argument("weight matrix order does not match n");
    WeightedGraph g;
    detail::PointIndex idx;
    const long nn = static_cast<long>(n);
    for (long y2 = 2 * nn - 1; y2 >= -2 * nn + 1; y2 -= 2)
        for (long x2 = -2 * nn + 1; x2 <= 2 * nn - 1; x2 += 2)
            if (std::abs(x2) + std::abs(y2) <= 2 * nn) idx.at(g, x2, y2);
    auto edge = [&](std::pair<long, long> a, std::pair<long, long> b, const Rational& w) {
        if (w != 0) g.add_edge(idx.get(a.first, a.second), idx.get(b.first, b.second), w);
    };
    const auto& e = m.entries();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            auto cell = detail::cell_geometry(n, r, c);
            edge(cell.west(), cell.top(), e(2 * r, 2 * c));
            edge(cell.top(), cell.east(), e(2 * r, 2 * c + 1));
            edge(cell.bottom(), cell.west(), e(2 * r + 1, 2 * c));
            edge(cell.east(), cell.bottom(), e(2 * r + 1, 2 * c + 1));
        }
    return g;
}

inline WeightedGraph build_aztec_graph(const WeightMatrix& m) { return build_aztec_graph(m.order(), m); }

enum class CityKind { regular, extended };

struct CitySpec {
    std::size_t order;
    CityKind kind;
};

/// A standalone city together with the vertex roles used by city_replace.
/// For a regular city only junctions, tops and bottoms are filled.
struct CityGraph {
    WeightedGraph graph;
    ExtendedCity roles;
};

/// A city whose diamond edges have weight x and extended edges weight 1.
inline CityGraph build_city(const CitySpec& spec, const Rational& x = 1) {
    const std::size_t k = spec.order;
    if (k == 0) throw std::invalid_argument("city order must be at least 1");
    CityGraph out;
    auto& g = out.graph;
    auto& c = out.roles;
    for (std::size_t i = 0; i <= k; ++i)
        c.junctions.push_back(g.add_vertex(Point{Rational(2 * static_cast<long>(i)), 0}));
    for (std::size_t i = 0; i < k; ++i) {
        c.tops.push_back(g.add_vertex(Point{Rational(2 * static_cast<long>(i) + 1), 1}));
        c.bottoms.push_back(g.add_vertex(Point{Rational(2 * static_cast<long>(i) + 1), -1}));
        g.add_edge(c.junctions[i], c.tops[i], x);
        g.add_edge(c.tops[i], c.junctions[i + 1], x);
        g.add_edge(c.junctions[i + 1], c.bottoms[i], x);
        g.add_edge(c.bottoms[i], c.junctions[i], x);
    }
    if (spec.kind == CityKind::extended) {
        c.west = g.add_vertex(Point{-1, 0});
        c.east = g.add_vertex(Point{Rational(2 * static_cast<long>(k) + 1), 0});
        g.add_edge(c.west, c.junctions.front(), 1);
        g.add_edge(c.east, c.junctions.back(), 1);
        for (std::size_t i = 0; i < k; ++i) {
            c.ups.push_back(g.add_vertex(Point{Rational(2 * static_cast<long>(i) + 1), 2}));
            c.downs.push_back(g.add_vertex(Point{Rational(2 * static_cast<long>(i) + 1), -2}));
            g.add_edge(c.ups[i], c.tops[i], 1);
            g.add_edge(c.downs[i], c.bottoms[i], 1);
        }
    }
    return out;
}

/// The dual graph G(d) of a generalized fortress (or G-bar(d)), all weights
/// 1. It is laid out on the Aztec diamond of order n = sum d: cell row r
/// holds m cities of orders d_1..d_m. Cities of the parts whose cells weigh
/// 1/2 in D_{1/2,1} (resp. D_{1,1/2}) are extended, the others regular.
/// Extended edges end on the corner vertices shared with the neighboring
/// cities.
inline WeightedGraph build_fortress_graph(const Composition& d, FortressVariant v) {
    const std::size_t n = static_cast<std::size_t>(d.total());
    const WeightMatrix m = tile_pattern(fortress_pattern(v, d), n);
    const Rational half = make_rational(1, 2);
    auto extended = [&](std::size_t r, std::size_t c) { return m.entries()(2 * r, 2 * c) == half; };

    WeightedGraph g;
    detail::PointIndex idx;
    auto corner = [&](std::pair<long, long> p) { return idx.at(g, p.first, p.second); };
    auto quarter = [&](long u4, long v4) { return g.add_vertex(Point{make_rational(u4, 4), make_rational(v4, 4)}); };

    for (std::size_t r = 0; r < n; ++r) {
        std::size_t c = 0;
        while (c < n) {
            if (!extended(r, c)) {
                auto cell = detail::cell_geometry(n, r, c);
                VertexId w = corner(cell.west()), t = corner(cell.top()), e = corner(cell.east()),
                         b = corner(cell.bottom());
                g.add_edge(w, t, 1);
                g.add_edge(t, e, 1);
                g.add_edge(e, b, 1);
                g.add_edge(b, w, 1);
                ++c;
                continue;
            }
            std::size_t end = c;
            while (end < n && extended(r, end)) ++end;
            const std::size_t k = end - c;
            const auto first = detail::cell_geometry(n, r, c);
            const auto last = detail::cell_geometry(n, r, end - 1);
            std::vector<VertexId> junctions{quarter(4 * first.u - 1, 4 * first.v + 1)};
            for (std::size_t i = 1; i < k; ++i) {
                auto shared = detail::cell_geometry(n, r, c + i).west();
                junctions.push_back(quarter(2 * shared.first, 2 * shared.second));
            }
            junctions.push_back(quarter(4 * last.u + 1, 4 * last.v - 1));
            g.add_edge(corner(first.west()), junctions.front(), 1);
            g.add_edge(corner(last.east()), junctions.back(), 1);
            for (std::size_t i = 0; i < k; ++i) {
                auto cell = detail::cell_geometry(n, r, c + i);
                VertexId t = quarter(4 * cell.u + 1, 4 * cell.v + 1);
                VertexId b = quarter(4 * cell.u - 1, 4 * cell.v - 1);
                g.add_edge(junctions[i], t, 1);
                g.add_edge(t, junctions[i + 1], 1);
                g.add_edge(junctions[i + 1], b, 1);
                g.add_edge(b, junctions[i], 1);
                g.add_edge(corner(cell.top()), t, 1);
                g.add_edge(corner(cell.bottom()), b, 1);
            }
            c = end;
        }
    }
    return g;
}

enum class BrickKind { B, C };

/// Brick period: 1x2 and 1x3 bricks (B) or 1x2 and 1x1 bricks (C).
inline long brick_period(BrickKind kind) { return kind == BrickKind::B ? 5 : 3; }

/// Row j of bricks lies between heights j - 1/2 and j + 1/2. A vertical edge
/// at x = i + 1/2 in row j exists when i - alignment - (j odd ? row_shift : 0)
/// is 0 or 2 modulo the period, so a 1x2 brick starts at every alignment
/// point of even rows.
struct BrickPhase {
    long alignment;
    long row_shift;
};

inline bool brick_vertical_edge(BrickKind kind, const BrickPhase& phase, long i, long j) {
    const long p = brick_period(kind);
    long off = i - phase.alignment - ((j % 2 != 0) ? phase.row_shift : 0);
    off = ((off % p) + p) % p;
    return off == 0 || off == 2;
}

/// True when the easternmost edge of the order-n diamond (x = n - 1/2,
/// row 0) is present and is the west side of a 1x2 brick.
inline bool easternmost_hexagon(std::size_t n, BrickKind kind, const BrickPhase& phase) {
    const long p = brick_period(kind);
    const long off = (((static_cast<long>(n) - 1 - phase.alignment) % p) + p) % p;
    return off == 0;
}

/// Phases with row_shift = +-1 that satisfy the easternmost-hexagon
/// condition.
inline std::vector<BrickPhase> brick_phase_candidates(std::size_t n, BrickKind kind) {
    std::vector<BrickPhase> out;
    const long p = brick_period(kind);
    for (long a = 0; a < p; ++a)
        for (long s : {-1L, 1L}) {
            BrickPhase ph{a, s};
            if (easternmost_hexagon(n, kind, ph)) out.push_back(ph);
        }
    return out;
}

/// The phase used for B_n and C_n: the easternmost-hexagon alignment with
/// odd rows shifted one unit left of row 0.
inline BrickPhase anchored_brick_phase(std::size_t n, BrickKind kind) {
    const long p = brick_period(kind);
    return {(static_cast<long>(n) - 1) % p, -1};
}

/// Induced subgraph of the brick lattice on the points with |x| + |y| <= n.
inline WeightedGraph build_brick_graph(std::size_t n, BrickKind kind, const BrickPhase& phase) {
    if (n < 1) throw std::invalid_argument("brick graph order must be positive");
    WeightedGraph g;
    detail::PointIndex idx;
    const long nn = static_cast<long>(n);
    for (long y2 = 2 * nn - 1; y2 >= -2 * nn + 1; y2 -= 2)
        for (long x2 = -2 * nn + 1; x2 <= 2 * nn - 1; x2 += 2)
            if (std::abs(x2) + std::abs(y2) <= 2 * nn) idx.at(g, x2, y2);
    for (long y2 = 2 * nn - 1; y2 >= -2 * nn + 1; y2 -= 2)
        for (long x2 = -2 * nn + 1; x2 <= 2 * nn - 1; x2 += 2) {
            if (!idx.contains(x2, y2)) continue;
            if (idx.contains(x2 + 2, y2)) g.add_edge(idx.get(x2, y2), idx.get(x2 + 2, y2), 1);
            const long i = (x2 - 1) / 2;
            const long j = (y2 + 1) / 2;
            if (idx.contains(x2, y2 + 2) && brick_vertical_edge(kind, phase, i, j))
                g.add_edge(idx.get(x2, y2), idx.get(x2, y2 + 2), 1);
        }
    return g;
}

inline WeightedGraph build_brick_graph(std::size_t n, BrickKind kind) {
    return build_brick_graph(n, kind, anchored_brick_phase(n, kind));
}

/// Debug rendering: vertices at their stored coordinates, edges of weight
/// other than 1 dashed. Vertices without coordinates are skipped.
inline std::string to_svg(const WeightedGraph& g, double scale = 40.0) {
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const auto& [id, pos] : g.vertices()) {
        if (!pos) continue;
        double x = pos->x.get_d(), y = pos->y.get_d();
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    auto X = [&](const Rational& x) { return (x.get_d() - minx + 1) * scale; };
    auto Y = [&](const Rational& y) { return (maxy - y.get_d() + 1) * scale; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (maxx - minx + 2) * scale
        << "\" height=\"" << (maxy - miny + 2) * scale << "\">\n";
    for (const auto& e : g.edges()) {
        auto a = g.position(e.u), b = g.position(e.v);
        if (!a || !b) continue;
        out << "  <line x1=\"" << X(a->x) << "\" y1=\"" << Y(a->y) << "\" x2=\"" << X(b->x) << "\" y2=\""
            << Y(b->y) << "\" stroke=\"black\"" << (e.weight == 1 ? "" : " stroke-dasharray=\"4 3\"")
            << "><title>" << to_display_string(e.weight) << "</title></line>\n";
    }
    for (const auto& [id, pos] : g.vertices()) {
        if (!pos) continue;
        out << "  <circle cx=\"" << X(pos->x) << "\" cy=\"" << Y(pos->y) << "\" r=\"" << scale / 10
            << "\"><title>" << id << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace tiling
