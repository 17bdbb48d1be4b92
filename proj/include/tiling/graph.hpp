// Weighted multigraphs and their line-oriented text form.
#pragma once

#include "tiling/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tiling {

using VertexId = std::uint32_t;

struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point&, const Point&) = default;
};

struct Edge {
    VertexId u;
    VertexId v;
    Rational weight;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite undirected multigraph with nonzero rational edge weights. Parallel
/// edges are allowed, self-loops are not. Vertices may carry planar
/// coordinates; nothing in the matching code looks at them.
class WeightedGraph {
public:
    void add_vertex(VertexId id, std::optional<Point> pos = std::nullopt) {
        auto [it, inserted] = vertices_.emplace(id, std::move(pos));
        if (!inserted) throw GraphError("duplicate vertex " + std::to_string(id));
    }

    VertexId add_vertex(std::optional<Point> pos = std::nullopt) {
        VertexId id = next_free_id();
        add_vertex(id, std::move(pos));
        return id;
    }

    void add_edge(VertexId u, VertexId v, Rational weight) {
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (!has_vertex(u)) throw GraphError("edge endpoint " + std::to_string(u) + " is not a vertex");
        if (!has_vertex(v)) throw GraphError("edge endpoint " + std::to_string(v) + " is not a vertex");
        if (weight == 0) throw GraphError("zero edge weight");
        edges_.push_back(Edge{u, v, std::move(weight)});
    }

    bool has_vertex(VertexId id) const { return vertices_.count(id) != 0; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::map<VertexId, std::optional<Point>>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<Point> position(VertexId id) const {
        auto it = vertices_.find(id);
        if (it == vertices_.end()) throw GraphError("no vertex " + std::to_string(id));
        return it->second;
    }

    VertexId next_free_id() const {
        return vertices_.empty() ? 0 : vertices_.rbegin()->first + 1;
    }

    /// Distinct neighbors, ascending.
    std::vector<VertexId> neighbors(VertexId v) const {
        std::set<VertexId> out;
        for (const auto& e : edges_) {
            if (e.u == v) out.insert(e.v);
            else if (e.v == v) out.insert(e.u);
        }
        return {out.begin(), out.end()};
    }

    /// Indices into edges() of every edge touching v.
    std::vector<std::size_t> incident_edges(VertexId v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
        return out;
    }

    /// Indices of the edges joining u and v.
    std::vector<std::size_t> edges_between(VertexId u, VertexId v) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) out.push_back(i);
        }
        return out;
    }

    /// Copy with the given vertices and all their incident edges removed.
    WeightedGraph without_vertices(const std::set<VertexId>& drop) const {
        WeightedGraph g;
        for (const auto& [id, pos] : vertices_)
            if (!drop.count(id)) g.vertices_.emplace(id, pos);
        for (const auto& e : edges_)
            if (!drop.count(e.u) && !drop.count(e.v)) g.edges_.push_back(e);
        return g;
    }

    /// Copy with the edge at `index` removed (vertices kept).
    WeightedGraph without_edge(std::size_t index) const {
        WeightedGraph g = *this;
        g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(index));
        return g;
    }

    void set_weight(std::size_t index, Rational w) {
        if (w == 0) throw GraphError("zero edge weight");
        edges_.at(index).weight = std::move(w);
    }

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    std::map<VertexId, std::optional<Point>> vertices_;
    std::vector<Edge> edges_;
};

/// Serializes as
///   v <id> [x y]
///   e <id1> <id2> <num>/<den>
/// with vertices ascending by id and edges in insertion order.
inline std::string to_text(const WeightedGraph& g) {
    std::ostringstream os;
    for (const auto& [id, pos] : g.vertices()) {
        os << "v " << id;
        if (pos) os << ' ' << to_fraction_string(pos->x) << ' ' << to_fraction_string(pos->y);
        os << '\n';
    }
    for (const auto& e : g.edges())
        os << "e " << e.u << ' ' << e.v << ' ' << to_fraction_string(e.weight) << '\n';
    return os.str();
}

inline WeightedGraph parse_graph(std::string_view text) {
    WeightedGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& why) {
        throw GraphError("line " + std::to_string(line_no) + ": " + why);
    };
    auto parse_id = [&](const std::string& tok) -> VertexId {
        if (tok.empty() || tok.size() > 10 || tok.find_first_not_of("0123456789") != std::string::npos)
            fail("bad vertex id '" + tok + "'");
        unsigned long long v = std::stoull(tok);
        if (v > UINT32_MAX) fail("vertex id out of range");
        return static_cast<VertexId>(v);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto guarded = [&](auto&& action) {
            try {
                action();
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        };
        if (tok[0] == "v") {
            if (tok.size() != 2 && tok.size() != 4) fail("expected 'v <id> [x y]'");
            VertexId id = parse_id(tok[1]);
            guarded([&] {
                if (tok.size() == 2) g.add_vertex(id);
                else g.add_vertex(id, Point{parse_rational(tok[2]), parse_rational(tok[3])});
            });
        } else if (tok[0] == "e") {
            if (tok.size() != 4) fail("expected 'e <id1> <id2> <weight>'");
            VertexId u = parse_id(tok[1]), v = parse_id(tok[2]);
            guarded([&] { g.add_edge(u, v, parse_rational(tok[3])); });
        } else {
            fail("unknown record '" + tok[0] + "'");
        }
    }
    return g;
}

}  // namespace tiling
