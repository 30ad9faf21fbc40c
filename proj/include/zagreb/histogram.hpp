#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>

#include "zagreb/errors.hpp"
#include "zagreb/graph.hpp"

namespace zagreb {

/// Unordered degree pair {lo, hi} with lo <= hi; the class of an edge is the
/// pair of its endpoint degrees.
struct DegreePair {
    int lo = 0;
    int hi = 0;
    auto operator<=>(const DegreePair&) const = default;
};

inline DegreePair make_class(int a, int b) { return a <= b ? DegreePair{a, b} : DegreePair{b, a}; }

/// Edge counts per degree class (m_{i,j}) plus vertex counts per degree (n_i).
class EdgeClassHistogram {
public:
    EdgeClassHistogram() = default;
    EdgeClassHistogram(std::map<DegreePair, std::int64_t> edge_classes,
                       std::map<int, std::int64_t> degree_counts)
        : edge_classes_(std::move(edge_classes)), degree_counts_(std::move(degree_counts)) {
        prune_zeros();
    }

    const std::map<DegreePair, std::int64_t>& edge_classes() const { return edge_classes_; }
    const std::map<int, std::int64_t>& degree_counts() const { return degree_counts_; }

    friend bool operator==(const EdgeClassHistogram& a, const EdgeClassHistogram& b) {
        return a.edge_classes_ == b.edge_classes_ && a.degree_counts_ == b.degree_counts_;
    }

    std::int64_t edge_count(int a, int b) const {
        auto it = edge_classes_.find(make_class(a, b));
        return it == edge_classes_.end() ? 0 : it->second;
    }
    std::int64_t vertex_count(int degree) const {
        auto it = degree_counts_.find(degree);
        return it == degree_counts_.end() ? 0 : it->second;
    }

    std::int64_t total_edges() const {
        std::int64_t m = 0;
        for (const auto& [cls, count] : edge_classes_) m += count;
        return m;
    }
    std::int64_t total_vertices() const {
        std::int64_t n = 0;
        for (const auto& [deg, count] : degree_counts_) n += count;
        return n;
    }

    /// Checks the defining identity i*n_i = sum_{j != i} m_{i,j} + 2*m_{i,i}
    /// for every degree, plus nonnegativity and degree >= 1.
    bool consistent() const {
        for (const auto& [cls, count] : edge_classes_)
            if (count < 0 || cls.lo < 1) return false;
        for (const auto& [deg, count] : degree_counts_)
            if (count < 0 || deg < 1) return false;
        std::map<int, std::int64_t> stub_sums;  // per-degree endpoint incidences
        for (const auto& [cls, count] : edge_classes_) {
            stub_sums[cls.lo] += count;
            stub_sums[cls.hi] += count;  // diagonal classes count twice
        }
        for (const auto& [deg, stubs] : stub_sums)
            if (stubs != static_cast<std::int64_t>(deg) * vertex_count(deg)) return false;
        for (const auto& [deg, count] : degree_counts_)
            if (count > 0 && stub_sums.find(deg) == stub_sums.end()) return false;
        return true;
    }

    void validate() const {
        if (!consistent()) throw inconsistent_histogram_error("edge class histogram is inconsistent");
    }

private:
    void prune_zeros() {
        std::erase_if(edge_classes_, [](const auto& e) { return e.second == 0; });
        std::erase_if(degree_counts_, [](const auto& e) { return e.second == 0; });
    }

    std::map<DegreePair, std::int64_t> edge_classes_;
    std::map<int, std::int64_t> degree_counts_;
};

/// Recomputed from scratch; requires a graph without isolated vertices.
inline EdgeClassHistogram edge_class_histogram(const Graph& g) {
    require_no_isolated(g);
    std::map<DegreePair, std::int64_t> classes;
    std::map<int, std::int64_t> degrees;
    for (Vertex v = 0; v < g.order(); ++v) ++degrees[g.degree(v)];
    for (const auto& [u, v] : g.edges()) ++classes[make_class(g.degree(u), g.degree(v))];
    return EdgeClassHistogram(std::move(classes), std::move(degrees));
}

/// The set of distinct edge classes present in the graph.
inline std::set<DegreePair> family_set(const Graph& g) {
    require_no_isolated(g);
    std::set<DegreePair> fam;
    for (const auto& [u, v] : g.edges()) fam.insert(make_class(g.degree(u), g.degree(v)));
    return fam;
}

inline std::set<DegreePair> family_set(const EdgeClassHistogram& h) {
    std::set<DegreePair> fam;
    for (const auto& [cls, count] : h.edge_classes())
        if (count > 0) fam.insert(cls);
    return fam;
}

} // namespace zagreb
