#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zagreb/conjecture.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/histogram.hpp"

namespace zagreb {

inline Graph path_graph(int l) {
    if (l < 1) throw bad_parameter_error("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
    return {l, edges};
}

inline Graph cycle_graph(int l) {
    if (l < 3) throw bad_parameter_error("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < l; ++i) edges.push_back({i, i + 1});
    edges.push_back({l - 1, 0});
    return {l, edges};
}

/// Star of total order l: center 0 joined to l-1 leaves.
inline Graph star_graph(int l) {
    if (l < 1) throw bad_parameter_error("star needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 1; i < l; ++i) edges.push_back({0, i});
    return {l, edges};
}

inline Graph complete_graph(int l) {
    if (l < 1) throw bad_parameter_error("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) edges.push_back({i, j});
    return {l, edges};
}

/// Parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw bad_parameter_error("bipartite parts must be nonempty");
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return {a + b, edges};
}

/// The ladder-like family xi(k), k >= 1: two disjoint paths of order 2k+1
/// (vertices 0..2k and 2k+1..4k+2-1), plus attachment groups at the odd
/// path positions — size 4 at the two ends, size 3 at interior odd positions
/// — each group vertex adjacent to the position-i vertex of both paths.
/// Every edge then joins a degree-2 to a degree-5 vertex, with
/// n = 7(k+1) and m = 10(k+1).
inline Graph xi(int k) {
    if (k < 1) throw bad_parameter_error("xi needs k >= 1");
    const int npath = 2 * k + 1;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < npath; ++i) {
        edges.push_back({i, i + 1});
        edges.push_back({npath + i, npath + i + 1});
    }
    int next = 2 * npath;
    for (int pos = 1; pos <= npath; pos += 2) {
        const int size = (pos == 1 || pos == npath) ? 4 : 3;
        const int v = pos - 1;
        const int u = npath + pos - 1;
        for (int s = 0; s < size; ++s) {
            edges.push_back({v, next});
            edges.push_back({u, next});
            ++next;
        }
    }
    return {next, edges};
}

// ---------------------------------------------------------------------------
// Cubic (3-regular) graphs.
// ---------------------------------------------------------------------------

inline bool is_cubic(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

/// Cycle 0..n-1 plus the n/2 long chords i ~ i + n/2; even n >= 4.
/// (This is also the cubic circulant with connection set {1, n/2}.)
inline Graph moebius_ladder(int n) {
    if (n < 4 || n % 2 != 0)
        throw bad_parameter_error("moebius ladder needs even order >= 4");
    const int q = n / 2;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({n - 1, 0});
    for (int i = 0; i < q; ++i) edges.push_back({i, i + q});
    return {n, edges};
}

inline Graph circulant_cubic(int n) { return moebius_ladder(n); }

/// Two concentric cycles of length n/2 joined by rungs; even n >= 6.
inline Graph prism_graph(int n) {
    if (n < 6 || n % 2 != 0)
        throw bad_parameter_error("prism needs even order >= 6");
    const int q = n / 2;
    std::vector<Edge> edges;
    for (int i = 0; i < q; ++i) {
        edges.push_back({i, (i + 1) % q});
        edges.push_back({q + i, q + (i + 1) % q});
        edges.push_back({i, q + i});
    }
    return {n, edges};
}

/// Random cubic graph by stub pairing: three stubs per vertex, shuffled and
/// paired; draws with loops or repeated pairs are rejected and redrawn.
inline Graph random_cubic(int n, std::uint64_t seed, int max_retries = 1000) {
    if (n < 4 || n % 2 != 0)
        throw bad_parameter_error("cubic graphs need even order >= 4");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(3) * n);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        stubs.clear();
        for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<Edge> seen;
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2) {
            Vertex a = stubs[i], b = stubs[i + 1];
            if (a == b) { ok = false; break; }
            if (a > b) std::swap(a, b);
            ok = seen.insert({a, b}).second;
        }
        if (ok) return {n, std::vector<Edge>(seen.begin(), seen.end())};
    }
    throw generation_failure_error("cubic pairing failed after " +
                                   std::to_string(max_retries) + " retries");
}

enum class CubicKind { complete4, prism, moebius_ladder, circulant, random_pairing };

inline Graph cubic_graph(CubicKind kind, int order, std::uint64_t seed = 0) {
    switch (kind) {
        case CubicKind::complete4:
            if (order != 4) throw bad_parameter_error("complete4 has order 4");
            return complete_graph(4);
        case CubicKind::prism: return prism_graph(order);
        case CubicKind::moebius_ladder: return moebius_ladder(order);
        case CubicKind::circulant: return circulant_cubic(order);
        case CubicKind::random_pairing: return random_cubic(order, seed);
    }
    throw bad_parameter_error("unknown cubic kind");
}

// ---------------------------------------------------------------------------
// Bridge join and disjoint counterexamples.
// ---------------------------------------------------------------------------

/// Disjoint union of g1 (every edge class {2,5}) and a cubic g2, plus one
/// new edge from a degree-2 vertex u of g1 to v in g2.  Afterwards u has
/// degree 3 and v degree 4; the joined indices follow the closed forms in
/// bridge_join_first_zagreb / bridge_join_second_zagreb / bridge_join_gap.
inline Graph bridge_join(const Graph& g1, Vertex u, const Graph& g2, Vertex v) {
    if (u < 0 || u >= g1.order() || v < 0 || v >= g2.order())
        throw index_out_of_range_error("bridge endpoint out of range");
    if (g1.degree(u) != 2)
        throw not_degree_two_error("bridge endpoint in the first graph must have degree 2");
    if (!is_cubic(g2))
        throw not_cubic_error("second graph of a bridge join must be 3-regular");
    static const std::set<DegreePair> two_five{make_class(2, 5)};
    if (family_set(g1) != two_five)
        throw bad_parameter_error("first graph of a bridge join must have all edges in class {2,5}");
    std::vector<Edge> edges = g1.edges();
    const Vertex shift = g1.order();
    for (const auto& [a, b] : g2.edges()) edges.push_back({a + shift, b + shift});
    edges.push_back({u, v + shift});
    return {g1.order() + g2.order(), edges};
}

/// Default endpoints: the lowest-index degree-2 vertex of g1, and vertex 0
/// of g2 (all its vertices are equivalent in the closed forms).
inline Graph bridge_join(const Graph& g1, const Graph& g2) {
    for (Vertex u = 0; u < g1.order(); ++u)
        if (g1.degree(u) == 2) return bridge_join(g1, u, g2, 0);
    throw not_degree_two_error("first graph has no degree-2 vertex");
}

/// r copies of K_{2,5} plus l copies of K_4, disjoint; gap is exactly 2rl.
inline Graph disjoint_counterexample(int r, int l) {
    if (r < 1 || l < 1) throw bad_parameter_error("need at least one copy of each part");
    Graph g = complete_bipartite(2, 5);
    for (int i = 1; i < r; ++i) g = disjoint_union(g, complete_bipartite(2, 5));
    for (int i = 0; i < l; ++i) g = disjoint_union(g, complete_graph(4));
    return g;
}

} // namespace zagreb
