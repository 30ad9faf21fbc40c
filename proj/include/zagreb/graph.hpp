#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zagreb/errors.hpp"

namespace zagreb {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph over dense 0-based vertex indices.
///
/// Immutable after construction: adjacency is stored as sorted neighbor
/// lists, the degree of a vertex is the length of its list, and no self
/// loops or parallel edges can be represented. Isolated vertices are
/// representable; analysis operations that require none reject them with
/// isolated_vertex_error.
class Graph {
public:
    static constexpr Vertex max_order = 1'000'000;

    Graph(Vertex order, const std::vector<Edge>& edges) {
        if (order < 1) throw bad_parameter_error("graph order must be at least 1");
        if (order > max_order) throw bad_parameter_error("graph order exceeds supported maximum");
        adj_.resize(static_cast<std::size_t>(order));
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= order || v < 0 || v >= order)
                throw index_out_of_range_error("edge endpoint out of range");
            if (u == v) throw self_loop_error("self loop on vertex " + std::to_string(u));
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
                throw duplicate_edge_error("edge listed more than once");
        }
        m_ = static_cast<std::int64_t>(edges.size());
    }

    Vertex order() const { return static_cast<Vertex>(adj_.size()); }
    std::int64_t size() const { return m_; }

    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    std::span<const Vertex> neighbors(Vertex v) const {
        const auto& nbrs = adj_[static_cast<std::size_t>(v)];
        return {nbrs.data(), nbrs.size()};
    }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& nbrs = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    /// (min degree, max degree) over all vertices.
    std::pair<int, int> degree_extremes() const {
        int lo = degree(0), hi = degree(0);
        for (Vertex v = 1; v < order(); ++v) {
            int d = degree(v);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        return {lo, hi};
    }

    bool has_isolated_vertex() const {
        for (const auto& nbrs : adj_)
            if (nbrs.empty()) return true;
        return false;
    }

    bool is_connected() const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == adj_.size();
    }

    /// All edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::int64_t m_ = 0;
};

inline Graph build_graph(Vertex order, const std::vector<Edge>& edges) { return Graph(order, edges); }

/// Union on disjoint vertex sets; indices of g2 are shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<Edge> edges = g1.edges();
    const Vertex shift = g1.order();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(g1.order() + g2.order(), edges);
}

inline void require_no_isolated(const Graph& g) {
    if (g.has_isolated_vertex())
        throw isolated_vertex_error("operation requires a graph without isolated vertices");
}

} // namespace zagreb
