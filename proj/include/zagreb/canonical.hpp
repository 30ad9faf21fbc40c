#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/graph6.hpp"

namespace zagreb {

namespace detail {

/// Iterated color refinement: a vertex's next color is determined by its
/// current color and the sorted multiset of neighbor colors.  Returns stable
/// colors in [0, #cells), ordered so that equal colors mean indistinguishable
/// vertices under this refinement.
inline std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    const auto n = static_cast<std::size_t>(g.order());
    int cells = 1 + (n ? *std::max_element(colors.begin(), colors.end()) : 0);
    while (true) {
        std::vector<std::pair<std::vector<int>, Vertex>> keys;
        keys.reserve(n);
        for (Vertex v = 0; v < g.order(); ++v) {
            std::vector<int> key;
            key.reserve(g.neighbors(v).size() + 1);
            key.push_back(colors[static_cast<std::size_t>(v)]);
            for (Vertex u : g.neighbors(v)) key.push_back(colors[static_cast<std::size_t>(u)]);
            std::sort(key.begin() + 1, key.end());
            keys.emplace_back(std::move(key), v);
        }
        std::sort(keys.begin(), keys.end());
        std::vector<int> next(n, 0);
        int cell = 0;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i > 0 && keys[i].first != keys[i - 1].first) ++cell;
            next[static_cast<std::size_t>(keys[i].second)] = cell;
        }
        const int next_cells = n ? cell + 1 : 0;
        if (next_cells == cells) return next;
        cells = next_cells;
        colors = std::move(next);
    }
}

/// Relabel so vertex v gets label rank[v], then encode.  Labels must be a
/// permutation of 0..n-1.
inline std::string encode_relabeled(const Graph& g, const std::vector<int>& label) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.size()));
    for (const auto& [u, v] : g.edges())
        edges.push_back({label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]});
    return encode_graph6(Graph(g.order(), edges));
}

struct CanonicalSearch {
    const Graph& g;
    std::string best;
    bool have_best = false;

    void descend(std::vector<int> colors) {
        colors = refine_colors(g, colors);
        // locate the smallest non-singleton cell (lowest color on ties)
        std::map<int, std::vector<Vertex>> cells;
        for (Vertex v = 0; v < g.order(); ++v) cells[colors[static_cast<std::size_t>(v)]].push_back(v);
        const std::vector<Vertex>* target = nullptr;
        for (const auto& [c, members] : cells) {
            if (members.size() < 2) continue;
            if (!target || members.size() < target->size()) target = &members;
        }
        if (!target) {
            // discrete coloring: colors are a permutation, use them as labels
            std::string leaf = encode_relabeled(g, colors);
            if (!have_best || leaf < best) {
                best = std::move(leaf);
                have_best = true;
            }
            return;
        }
        // individualize each member of the target cell in turn
        const int fresh = static_cast<int>(cells.size());
        for (Vertex v : *target) {
            std::vector<int> child = colors;
            child[static_cast<std::size_t>(v)] = fresh;
            descend(std::move(child));
        }
    }
};

} // namespace detail

/// Canonical form: the lexicographically least graph6 encoding over all
/// labelings reachable by refinement plus individualization.  Equal strings
/// exactly characterize isomorphic graphs.
inline std::string canonical_graph6(const Graph& g) {
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 0);
    // seed with degree ranks so refinement starts from an invariant partition
    std::vector<int> degs;
    for (Vertex v = 0; v < g.order(); ++v) degs.push_back(g.degree(v));
    std::vector<int> sorted = degs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), degs[static_cast<std::size_t>(v)]);
        colors[static_cast<std::size_t>(v)] = static_cast<int>(it - sorted.begin());
    }
    detail::CanonicalSearch search{g, {}, false};
    search.descend(std::move(colors));
    return search.best;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_graph6(a) == canonical_graph6(b);
}

} // namespace zagreb
