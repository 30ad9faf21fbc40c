#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Uniform random labeled tree on n >= 2 vertices via a random Pruefer
/// sequence.
inline Graph random_tree(int n, std::uint64_t seed) {
    if (n < 2) throw bad_parameter_error("random tree needs order >= 2");
    std::mt19937_64 rng(seed);
    if (n == 2) return {2, {{0, 1}}};
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int s : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, s});
        if (--degree[static_cast<std::size_t>(s)] == 1) leaves.insert(s);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.push_back({a, b});
    return {n, edges};
}

/// Random connected graph with exactly one cycle: a random tree plus one
/// uniformly chosen non-edge.
inline Graph random_unicyclic(int n, std::uint64_t seed) {
    if (n < 3) throw bad_parameter_error("unicyclic graph needs order >= 3");
    Graph tree = random_tree(n, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (true) {
        const int u = pick(rng);
        const int v = pick(rng);
        if (u == v || tree.has_edge(u, v)) continue;
        std::vector<Edge> edges = tree.edges();
        edges.push_back({u, v});
        return {n, edges};
    }
}

namespace detail {

/// Pair up stubs into a simple graph: random pairing, then bounded rounds of
/// random partner swaps to clear loops and duplicate edges.
inline std::optional<std::vector<Edge>> pair_stubs_simple(std::vector<Vertex> stubs,
                                                          std::mt19937_64& rng,
                                                          int max_rounds = 200) {
    if (stubs.size() % 2 != 0) return std::nullopt;
    std::shuffle(stubs.begin(), stubs.end(), rng);
    const std::size_t m = stubs.size() / 2;
    if (m == 0) return std::vector<Edge>{};
    std::vector<std::pair<Vertex, Vertex>> pairs(m);
    for (std::size_t i = 0; i < m; ++i) pairs[i] = {stubs[2 * i], stubs[2 * i + 1]};
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (int round = 0; round <= max_rounds; ++round) {
        std::map<Edge, int> counts;
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < m; ++i) {
            auto [a, b] = pairs[i];
            if (a == b) {
                bad.push_back(i);
                continue;
            }
            if (a > b) std::swap(a, b);
            if (++counts[{a, b}] > 1) bad.push_back(i);
        }
        if (bad.empty()) {
            std::vector<Edge> edges;
            edges.reserve(m);
            for (auto [a, b] : pairs) edges.push_back({std::min(a, b), std::max(a, b)});
            return edges;
        }
        for (std::size_t i : bad) std::swap(pairs[i].second, pairs[pick(rng)].second);
    }
    return std::nullopt;
}

} // namespace detail

/// Random graph whose degrees all lie in [lo, hi]: sample a degree sequence
/// uniformly, fix handshake parity, and realize it by stub pairing with
/// repair.  Degrees never leave the window, so the spread is at most hi-lo.
inline Graph random_degree_window_graph(int order, int lo, int hi, std::uint64_t seed,
                                        int max_retries = 50) {
    if (order < 2 || lo < 1 || hi < lo)
        throw bad_parameter_error("window graph needs order >= 2 and 1 <= lo <= hi");
    if (lo > order - 1)
        throw bad_parameter_error("minimum degree impossible at this order");
    std::mt19937_64 rng(seed);
    const int cap = std::min(hi, order - 1);
    std::uniform_int_distribution<int> pick(lo, cap);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<int> degree(static_cast<std::size_t>(order));
        long long total = 0;
        for (auto& d : degree) {
            d = pick(rng);
            total += d;
        }
        if (total % 2 != 0) {
            // nudge one vertex inside the window to fix parity
            bool fixed = false;
            for (auto& d : degree) {
                if (d < cap) { ++d; fixed = true; break; }
                if (d > lo) { --d; fixed = true; break; }
            }
            if (!fixed) continue;  // lo == cap and odd total: resample
        }
        std::vector<Vertex> stubs;
        stubs.reserve(static_cast<std::size_t>(total + 1));
        for (int v = 0; v < order; ++v)
            stubs.insert(stubs.end(), static_cast<std::size_t>(degree[static_cast<std::size_t>(v)]), v);
        if (auto edges = detail::pair_stubs_simple(std::move(stubs), rng))
            return {order, *edges};
    }
    throw generation_failure_error("could not realize a degree-window graph");
}

} // namespace zagreb
