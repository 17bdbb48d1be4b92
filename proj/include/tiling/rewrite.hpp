// Local subgraph replacements that change the matching generating function
// by a known factor. Every rewrite returns a new graph; the receipt factor
// satisfies M(before) = factor * M(after).
#pragma once

#include "tiling/graph.hpp"

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tiling {

struct RewriteReceipt {
    Rational factor;
    std::string description;
};

struct RewriteResult {
    WeightedGraph graph;
    RewriteReceipt receipt;
};

class ShapeError : public GraphError {
public:
    using GraphError::GraphError;
};

namespace detail {

inline std::string vid(VertexId v) { return std::to_string(v); }

inline void require_vertex(const WeightedGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw GraphError("vertex " + vid(v) + " is not in the graph");
}

// The single edge joining u and v; fails when missing or doubled.
inline const Edge& single_edge(const WeightedGraph& g, VertexId u, VertexId v) {
    auto idx = g.edges_between(u, v);
    if (idx.empty()) throw ShapeError("missing adjacency " + vid(u) + "-" + vid(v));
    if (idx.size() > 1) throw ShapeError("parallel edges at adjacency " + vid(u) + "-" + vid(v));
    return g.edges()[idx.front()];
}

inline void require_exact_neighbors(const WeightedGraph& g, VertexId v,
                                    const std::set<VertexId>& expected) {
    for (std::size_t i : g.incident_edges(v)) {
        const Edge& e = g.edges()[i];
        VertexId other = e.u == v ? e.v : e.u;
        if (!expected.count(other))
            throw ShapeError("inner vertex " + vid(v) + " has outside neighbor " + vid(other));
    }
}

inline void require_distinct(const std::vector<VertexId>& ids) {
    std::set<VertexId> seen;
    for (VertexId v : ids)
        if (!seen.insert(v).second) throw ShapeError("vertex " + vid(v) + " designated twice");
}

}  // namespace detail

/// Replaces v by a path v' - x - v'' where v' keeps the neighbors in
/// `keep` and v'' takes the neighbors in `move`. v' reuses v's id; v'' and x
/// get the next two free ids, in that order. New edges have weight 1.
/// The matching generating function is unchanged.
inline WeightedGraph vertex_split(const WeightedGraph& g, VertexId v,
                                  const std::set<VertexId>& keep,
                                  const std::set<VertexId>& move) {
    detail::require_vertex(g, v);
    auto nb = g.neighbors(v);
    std::set<VertexId> all(nb.begin(), nb.end());
    for (VertexId h : keep)
        if (move.count(h)) throw GraphError("neighbor " + detail::vid(h) + " is in both parts");
    std::set<VertexId> joined = keep;
    joined.insert(move.begin(), move.end());
    if (joined != all) throw GraphError("partition does not cover the neighbors of " + detail::vid(v));

    WeightedGraph out;
    for (const auto& [id, pos] : g.vertices()) out.add_vertex(id, pos);
    VertexId second = out.add_vertex(g.position(v));
    VertexId middle = out.add_vertex(g.position(v));
    for (const auto& e : g.edges()) {
        if (e.u == v && move.count(e.v)) out.add_edge(second, e.v, e.weight);
        else if (e.v == v && move.count(e.u)) out.add_edge(e.u, second, e.weight);
        else out.add_edge(e.u, e.v, e.weight);
    }
    out.add_edge(v, middle, 1);
    out.add_edge(middle, second, 1);
    return out;
}

/// Collapses each family of parallel edges into one edge carrying the
/// weight sum. A family summing to zero disappears.
inline WeightedGraph merge_parallel(const WeightedGraph& g) {
    WeightedGraph out;
    for (const auto& [id, pos] : g.vertices()) out.add_vertex(id, pos);
    std::vector<std::pair<std::pair<VertexId, VertexId>, Rational>> merged;
    std::map<std::pair<VertexId, VertexId>, std::size_t> slot;
    for (const auto& e : g.edges()) {
        auto key = std::minmax(e.u, e.v);
        auto [it, inserted] = slot.emplace(std::pair{key.first, key.second}, merged.size());
        if (inserted) merged.push_back({{e.u, e.v}, e.weight});
        else merged[it->second].second += e.weight;
    }
    for (auto& [ends, w] : merged)
        if (w != 0) out.add_edge(ends.first, ends.second, w);
    return out;
}

/// Multiplies every edge at v by t > 0, which multiplies M by t.
inline RewriteResult star_scale(const WeightedGraph& g, VertexId v, const Rational& t) {
    if (t <= 0) throw GraphError("star scaling needs t > 0, got " + to_display_string(t));
    detail::require_vertex(g, v);
    WeightedGraph out = g;
    for (std::size_t i : g.incident_edges(v)) out.set_weight(i, g.edges()[i].weight * t);
    return {std::move(out),
            {1 / t, "star scaling at " + detail::vid(v) + " by " + to_display_string(t)}};
}

/// Which urban-renewal gadget a SpiderCell describes.
///   full            4-cycle inner[0..3], spokes outer[k]-inner[k] of weight 1
///   missing_corner  all-ones path inner[0..2] with three spokes; one new vertex
///   missing_side    all-ones edge inner[0]-inner[1] with two spokes; two new vertices
enum class SpiderVariant { full, missing_corner, missing_side };

struct SpiderCell {
    std::vector<VertexId> inner;
    std::vector<VertexId> outer;
};

/// Urban renewal. For the full gadget with cycle weights x, y, z, t on
/// inner[0]inner[1], inner[1]inner[2], inner[2]inner[3], inner[3]inner[0],
/// the inner vertices are deleted and the outer vertices joined in a cycle
/// whose edge outer[k]outer[k+1] carries the weight of the opposite inner
/// edge divided by xz + yt; the receipt factor is xz + yt. The two partial
/// gadgets require unit weights, close the outer cycle with fresh vertices
/// using weight 1/2 edges, and have factor 2.
inline RewriteResult urban_renewal(const WeightedGraph& g, const SpiderCell& cell,
                                   SpiderVariant variant) {
    const std::size_t legs = variant == SpiderVariant::full ? 4
                             : variant == SpiderVariant::missing_corner ? 3 : 2;
    if (cell.inner.size() != legs || cell.outer.size() != legs)
        throw ShapeError("spider gadget needs " + std::to_string(legs) + " inner and " +
                         std::to_string(legs) + " outer vertices");
    std::vector<VertexId> ids = cell.inner;
    ids.insert(ids.end(), cell.outer.begin(), cell.outer.end());
    for (VertexId v : ids) detail::require_vertex(g, v);
    detail::require_distinct(ids);

    const auto& in = cell.inner;
    const auto& out_v = cell.outer;
    // Inner adjacency: a cycle for the full gadget, a path otherwise.
    std::vector<Rational> side;
    const std::size_t sides = legs == 4 ? 4 : legs - 1;
    for (std::size_t k = 0; k < sides; ++k)
        side.push_back(detail::single_edge(g, in[k], in[(k + 1) % legs]).weight);
    for (std::size_t k = 0; k < legs; ++k) {
        const Edge& spoke = detail::single_edge(g, out_v[k], in[k]);
        if (spoke.weight != 1)
            throw ShapeError("spoke " + detail::vid(out_v[k]) + "-" + detail::vid(in[k]) +
                             " must have weight 1");
    }
    for (std::size_t k = 0; k < legs; ++k) {
        std::set<VertexId> allowed{out_v[k]};
        if (legs == 4 || k > 0) allowed.insert(in[(k + legs - 1) % legs]);
        if (legs == 4 || k + 1 < legs) allowed.insert(in[(k + 1) % legs]);
        detail::require_exact_neighbors(g, in[k], allowed);
    }

    WeightedGraph result = g.without_vertices(std::set<VertexId>(in.begin(), in.end()));
    if (variant == SpiderVariant::full) {
        const Rational delta = side[0] * side[2] + side[1] * side[3];
        if (delta == 0) throw MathError("spider cell has zero cell-factor");
        for (std::size_t k = 0; k < 4; ++k)
            result.add_edge(out_v[k], out_v[(k + 1) % 4], side[(k + 2) % 4] / delta);
        return {std::move(result),
                {delta, "urban renewal, cell-factor " + to_display_string(delta)}};
    }

    for (const auto& w : side)
        if (w != 1) throw ShapeError("partial spider gadgets must have unit weights");
    const Rational half(1, 2);
    std::vector<VertexId> ring = out_v;
    while (ring.size() < 4) ring.push_back(result.add_vertex());
    for (std::size_t k = 0; k < 4; ++k) result.add_edge(ring[k], ring[(k + 1) % 4], half);
    return {std::move(result),
            {Rational(2), variant == SpiderVariant::missing_corner
                              ? "urban renewal (three legs), factor 2"
                              : "urban renewal (two legs), factor 2"}};
}

/// A row of k diamonds sharing corner vertices: diamond i has west corner
/// junctions[i], east corner junctions[i+1], top tops[i], bottom bottoms[i].
/// The extended edges hang off west/east ends and every top/bottom.
struct ExtendedCity {
    std::vector<VertexId> junctions;  // k + 1
    std::vector<VertexId> tops;       // k
    std::vector<VertexId> bottoms;    // k
    VertexId west = 0;
    VertexId east = 0;
    std::vector<VertexId> ups;    // k, attached to tops
    std::vector<VertexId> downs;  // k, attached to bottoms

    std::size_t order() const { return tops.size(); }
};

/// Replaces an extended city (diamond edges of weight x > 0, extended edges
/// of weight 1) by a regular city on the extended-edge endpoints with all
/// weights 1/(2x). The k - 1 inner junctions of the new city are fresh
/// vertices. Receipt factor (2x^2)^k.
inline RewriteResult city_replace(const WeightedGraph& g, const ExtendedCity& city) {
    const std::size_t k = city.order();
    if (k == 0) throw ShapeError("city order must be at least 1");
    if (city.junctions.size() != k + 1 || city.bottoms.size() != k || city.ups.size() != k ||
        city.downs.size() != k)
        throw ShapeError("extended city vertex lists have inconsistent sizes");

    std::vector<VertexId> inner = city.junctions;
    inner.insert(inner.end(), city.tops.begin(), city.tops.end());
    inner.insert(inner.end(), city.bottoms.begin(), city.bottoms.end());
    std::vector<VertexId> ends{city.west, city.east};
    ends.insert(ends.end(), city.ups.begin(), city.ups.end());
    ends.insert(ends.end(), city.downs.begin(), city.downs.end());
    std::vector<VertexId> ids = inner;
    ids.insert(ids.end(), ends.begin(), ends.end());
    for (VertexId v : ids) detail::require_vertex(g, v);
    detail::require_distinct(ids);

    const Rational x = detail::single_edge(g, city.junctions[0], city.tops[0]).weight;
    if (x <= 0) throw ShapeError("city weight must be positive");
    auto diamond_edge = [&](VertexId a, VertexId b) {
        if (detail::single_edge(g, a, b).weight != x)
            throw ShapeError("city edge " + detail::vid(a) + "-" + detail::vid(b) +
                             " does not carry the uniform weight");
    };
    auto extended_edge = [&](VertexId a, VertexId b) {
        if (detail::single_edge(g, a, b).weight != 1)
            throw ShapeError("extended edge " + detail::vid(a) + "-" + detail::vid(b) +
                             " must have weight 1");
    };
    for (std::size_t i = 0; i < k; ++i) {
        diamond_edge(city.junctions[i], city.tops[i]);
        diamond_edge(city.tops[i], city.junctions[i + 1]);
        diamond_edge(city.junctions[i + 1], city.bottoms[i]);
        diamond_edge(city.bottoms[i], city.junctions[i]);
        extended_edge(city.ups[i], city.tops[i]);
        extended_edge(city.downs[i], city.bottoms[i]);
    }
    extended_edge(city.west, city.junctions[0]);
    extended_edge(city.east, city.junctions[k]);
    for (std::size_t i = 0; i <= k; ++i) {
        std::set<VertexId> allowed;
        if (i > 0) allowed.insert({city.tops[i - 1], city.bottoms[i - 1]});
        if (i < k) allowed.insert({city.tops[i], city.bottoms[i]});
        if (i == 0) allowed.insert(city.west);
        if (i == k) allowed.insert(city.east);
        detail::require_exact_neighbors(g, city.junctions[i], allowed);
    }
    for (std::size_t i = 0; i < k; ++i) {
        detail::require_exact_neighbors(
            g, city.tops[i], {city.junctions[i], city.junctions[i + 1], city.ups[i]});
        detail::require_exact_neighbors(
            g, city.bottoms[i], {city.junctions[i], city.junctions[i + 1], city.downs[i]});
    }

    WeightedGraph result = g.without_vertices(std::set<VertexId>(inner.begin(), inner.end()));
    std::vector<VertexId> corner{city.west};
    for (std::size_t i = 1; i < k; ++i) corner.push_back(result.add_vertex(g.position(city.junctions[i])));
    corner.push_back(city.east);
    const Rational w = 1 / (2 * x);
    for (std::size_t i = 0; i < k; ++i) {
        result.add_edge(corner[i], city.ups[i], w);
        result.add_edge(city.ups[i], corner[i + 1], w);
        result.add_edge(corner[i + 1], city.downs[i], w);
        result.add_edge(city.downs[i], corner[i], w);
    }
    const Rational factor = pow(Rational(2 * x * x), static_cast<long>(k));
    return {std::move(result),
            {factor, "extended city of order " + std::to_string(k) + " replaced"}};
}

}  // namespace tiling
