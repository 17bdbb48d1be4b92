// Brute-force matching generating function and forced-edge elimination.
#pragma once

#include "tiling/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tiling {

namespace detail {

// Cuthill-McKee order: BFS from a minimum-degree vertex, visiting
// neighbors by ascending degree. Keeps the live frontier of the
// lowest-first elimination below narrow for lattice-like graphs.
inline std::vector<VertexId> elimination_order(const WeightedGraph& g) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& [id, pos] : g.vertices()) adj[id];
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& [id, nb] : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    auto degree = [&](VertexId v) { return adj[v].size(); };

    std::vector<VertexId> order;
    std::map<VertexId, bool> seen;
    while (order.size() < adj.size()) {
        VertexId start = 0;
        bool found = false;
        for (const auto& [id, nb] : adj) {
            if (seen[id]) continue;
            if (!found || nb.size() < adj[start].size()) {
                start = id;
                found = true;
            }
        }
        std::deque<VertexId> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            order.push_back(v);
            std::vector<VertexId> next;
            for (VertexId u : adj[v])
                if (!seen[u]) next.push_back(u);
            std::stable_sort(next.begin(), next.end(),
                             [&](VertexId a, VertexId b) { return degree(a) < degree(b); });
            for (VertexId u : next) {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    return order;
}

class MatchingCounter {
public:
    explicit MatchingCounter(const WeightedGraph& g) {
        std::vector<VertexId> order = elimination_order(g);
        std::map<VertexId, std::size_t> index;
        for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
        size_ = order.size();
        words_ = (size_ + 63) / 64;
        adj_.resize(size_);
        // Parallel edges are summed up front.
        std::vector<std::map<std::size_t, Rational>> merged(size_);
        for (const auto& e : g.edges()) {
            std::size_t a = index[e.u], b = index[e.v];
            merged[a][b] += e.weight;
            merged[b][a] += e.weight;
        }
        for (std::size_t i = 0; i < size_; ++i)
            for (auto& [j, w] : merged[i])
                if (w != 0) adj_[i].emplace_back(j, w);
    }

    Rational count() {
        if (size_ % 2 == 1) return 0;
        Key all(words_, 0);
        for (std::size_t i = 0; i < size_; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
        return solve(all);
    }

    std::size_t states() const { return memo_.size(); }

private:
    using Key = std::vector<std::uint64_t>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = 0x9e3779b97f4a7c15ULL;
            for (auto w : k) {
                h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    static bool test(const Key& k, std::size_t i) { return (k[i / 64] >> (i % 64)) & 1U; }
    static void clear(Key& k, std::size_t i) { k[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    Rational solve(const Key& live) {
        std::size_t v = size_;
        for (std::size_t w = 0; w < words_; ++w) {
            if (live[w] != 0) {
                v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(live[w]));
                break;
            }
        }
        if (v == size_) return 1;
        if (auto it = memo_.find(live); it != memo_.end()) return it->second;

        Rational total = 0;
        for (const auto& [u, w] : adj_[v]) {
            if (!test(live, u)) continue;
            Key rest = live;
            clear(rest, v);
            clear(rest, u);
            Rational sub = solve(rest);
            if (sub != 0) total += w * sub;
        }
        memo_.emplace(live, total);
        return total;
    }

    std::size_t size_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> adj_;
    std::unordered_map<Key, Rational, KeyHash> memo_;
};

}  // namespace detail

/// Sum over all perfect matchings of the product of edge weights.
/// The empty graph gives 1; graphs without a perfect matching give 0.
///
/// Eliminates vertices lowest-first along a Cuthill-McKee order and
/// memoizes on the set of still-unmatched vertices, so the cost is
/// governed by the bandwidth of that order rather than the matching count.
inline Rational matching_gen_fn(const WeightedGraph& g) {
    detail::MatchingCounter counter(g);
    return counter.count();
}

struct ForcedElimination {
    WeightedGraph residual;
    Rational factor;
};

/// Strips edges at degree-1 vertices (together with both endpoints) until
/// none remain; M(g) = factor * M(residual). An isolated vertex means no
/// perfect matching exists: the factor is then 0 and the residual empty.
inline ForcedElimination eliminate_forced(const WeightedGraph& g) {
    WeightedGraph current = g;
    Rational factor = 1;
    for (;;) {
        bool changed = false;
        for (const auto& [v, pos] : current.vertices()) {
            auto nb = current.neighbors(v);
            if (nb.empty()) return {WeightedGraph{}, Rational(0)};
            if (nb.size() != 1) continue;
            VertexId u = nb.front();
            Rational w = 0;
            for (std::size_t i : current.edges_between(v, u)) w += current.edges()[i].weight;
            factor *= w;
            if (factor == 0) return {WeightedGraph{}, Rational(0)};
            current = current.without_vertices({v, u});
            changed = true;
            break;
        }
        if (!changed) break;
    }
    return {std::move(current), factor};
}

}  // namespace tiling
