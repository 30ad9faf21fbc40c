#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zagreb/canonical.hpp"
#include "zagreb/certificate.hpp"
#include "zagreb/conjecture.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/histogram.hpp"
#include "zagreb/indices.hpp"

namespace zagreb {

enum class SearchObjective { minimize_order, maximize_gap_at_order, count_at_order };

inline std::string objective_name(SearchObjective o) {
    switch (o) {
        case SearchObjective::minimize_order: return "minimize-order";
        case SearchObjective::maximize_gap_at_order: return "maximize-gap-at-order";
        case SearchObjective::count_at_order: return "count-at-order";
    }
    return "unknown";
}

struct SearchConfig {
    int degree_lo = 2;
    int degree_hi = 5;
    std::int64_t order_lo = 1;
    std::int64_t order_hi = 11;
    SearchObjective objective = SearchObjective::minimize_order;
    bool require_connected = false;
    std::int64_t swap_budget = 100000;
    int restarts = 8;
    std::uint64_t seed = 0;
    std::optional<DegreePair> forbidden_class;  // class forced to zero edges
    // full histogram enumeration is exponential in the order, so beyond this
    // limit the histogram phase samples instead of enumerating
    std::int64_t exhaustive_order_limit = 18;
    double temperature = 10.0;
    double cooling = 0.999;

    void validate() const {
        if (degree_lo < 1 || degree_hi < degree_lo || degree_hi > 8)
            throw bad_parameter_error("degree bounds must satisfy 1 <= lo <= hi <= 8");
        if (order_lo < 1 || order_hi < order_lo)
            throw bad_parameter_error("order bounds must satisfy 1 <= lo <= hi");
        if (swap_budget < 1) throw bad_parameter_error("swap budget must be positive");
        if (restarts < 1) throw bad_parameter_error("restart count must be positive");
        if (!(cooling > 0.0) || cooling > 1.0)
            throw bad_parameter_error("cooling ratio must be in (0, 1]");
    }
};

/// One consistent histogram together with everything the gap depends on.
struct HistogramCandidate {
    EdgeClassHistogram histogram;
    std::int64_t n = 0;
    std::int64_t m = 0;
    int128 m1 = 0;
    int128 m2 = 0;
    int128 gap = 0;
};

inline HistogramCandidate make_candidate(EdgeClassHistogram h) {
    h.validate();
    HistogramCandidate c;
    c.histogram = std::move(h);
    c.n = c.histogram.total_vertices();
    c.m = c.histogram.total_edges();
    c.m1 = histogram_first_zagreb(c.histogram);
    c.m2 = histogram_second_zagreb(c.histogram);
    c.gap = histogram_gap(c.histogram);
    return c;
}

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::string histogram_key(const EdgeClassHistogram& h) {
    std::string key;
    for (const auto& [cls, count] : h.edge_classes())
        key += std::to_string(cls.lo) + "," + std::to_string(cls.hi) + ":" +
               std::to_string(count) + ";";
    key += "|";
    for (const auto& [deg, count] : h.degree_counts())
        key += std::to_string(deg) + ":" + std::to_string(count) + ";";
    return key;
}

/// Exhaustive enumeration of consistent histograms over a degree window at
/// one fixed order.  Processes degrees in ascending rows; within a row the
/// class count toward the highest degree is forced by the remaining stub
/// budget, and the final row's diagonal is forced up to a parity check.
struct HistogramEnumerator {
    int lo = 0;
    int hi = 0;
    std::optional<DegreePair> forbidden;
    bool necessary_condition_filter = false;  // require a {2,5} and a {3,3} edge
    std::int64_t max_results = 200000;

    std::vector<std::int64_t> nd;        // vertices per degree, index d-lo
    std::vector<std::int64_t> committed; // stubs already bound by lower rows
    std::vector<std::int64_t> m;         // class counts, index (i-lo)*W + (j-lo), i<=j
    std::vector<HistogramCandidate> out;
    bool truncated = false;

    int W() const { return hi - lo + 1; }
    std::int64_t& mref(int i, int j) { return m[static_cast<std::size_t>((i - lo) * W() + (j - lo))]; }

    std::int64_t pair_cap(int i, int j) const {
        const std::int64_t ni = nd[static_cast<std::size_t>(i - lo)];
        const std::int64_t nj = nd[static_cast<std::size_t>(j - lo)];
        return i == j ? ni * (ni - 1) / 2 : ni * nj;
    }

    bool is_forbidden(int i, int j) const {
        return forbidden && forbidden->lo == i && forbidden->hi == j;
    }

    void run(std::int64_t order) {
        nd.assign(static_cast<std::size_t>(W()), 0);
        committed.assign(static_cast<std::size_t>(W()), 0);
        m.assign(static_cast<std::size_t>(W() * W()), 0);
        compose(lo, order);
    }

    void compose(int d, std::int64_t left) {
        if (truncated) return;
        if (d == hi) {
            nd[static_cast<std::size_t>(d - lo)] = left;
            std::int64_t stubs = 0;
            for (int i = lo; i <= hi; ++i) stubs += static_cast<std::int64_t>(i) * nd[static_cast<std::size_t>(i - lo)];
            if (stubs % 2 == 0) row(lo);
            return;
        }
        for (std::int64_t c = 0; c <= left; ++c) {
            nd[static_cast<std::size_t>(d - lo)] = c;
            compose(d + 1, left - c);
        }
        nd[static_cast<std::size_t>(d - lo)] = 0;
    }

    void row(int d) {
        if (truncated) return;
        const std::int64_t budget =
            static_cast<std::int64_t>(d) * nd[static_cast<std::size_t>(d - lo)] -
            committed[static_cast<std::size_t>(d - lo)];
        if (budget < 0) return;
        if (d == hi) {
            if (budget % 2 != 0) return;
            const std::int64_t diag = budget / 2;
            if (diag > pair_cap(hi, hi)) return;
            if (diag > 0 && is_forbidden(hi, hi)) return;
            mref(hi, hi) = diag;
            emit();
            mref(hi, hi) = 0;
            return;
        }
        const std::int64_t diag_max = std::min(pair_cap(d, d), budget / 2);
        for (std::int64_t diag = 0; diag <= diag_max; ++diag) {
            if (diag > 0 && is_forbidden(d, d)) break;
            mref(d, d) = diag;
            fill(d, d + 1, budget - 2 * diag);
        }
        mref(d, d) = 0;
    }

    void fill(int d, int j, std::int64_t left) {
        if (truncated) return;
        if (j == hi) {
            // the count toward the top degree absorbs the rest of the budget
            if (left > pair_cap(d, hi)) return;
            if (left > 0 && is_forbidden(d, hi)) return;
            mref(d, hi) = left;
            committed[static_cast<std::size_t>(hi - lo)] += left;
            row(d + 1);
            committed[static_cast<std::size_t>(hi - lo)] -= left;
            mref(d, hi) = 0;
            return;
        }
        const std::int64_t cap = std::min(pair_cap(d, j), left);
        for (std::int64_t c = 0; c <= cap; ++c) {
            if (c > 0 && is_forbidden(d, j)) break;
            mref(d, j) = c;
            committed[static_cast<std::size_t>(j - lo)] += c;
            fill(d, j + 1, left - c);
            committed[static_cast<std::size_t>(j - lo)] -= c;
        }
        mref(d, j) = 0;
    }

    void emit() {
        std::map<DegreePair, std::int64_t> classes;
        std::map<int, std::int64_t> counts;
        for (int i = lo; i <= hi; ++i) {
            if (nd[static_cast<std::size_t>(i - lo)] > 0)
                counts[i] = nd[static_cast<std::size_t>(i - lo)];
            for (int j = i; j <= hi; ++j) {
                const std::int64_t c = m[static_cast<std::size_t>((i - lo) * W() + (j - lo))];
                if (c > 0) classes[{i, j}] = c;
            }
        }
        if (classes.empty()) return;
        EdgeClassHistogram h(std::move(classes), std::move(counts));
        if (!h.consistent()) return;
        if (necessary_condition_filter && (h.edge_count(2, 5) == 0 || h.edge_count(3, 3) == 0))
            return;
        HistogramCandidate cand = make_candidate(std::move(h));
        if (cand.gap <= 0) return;
        if (static_cast<std::int64_t>(out.size()) >= max_results) {
            truncated = true;
            return;
        }
        out.push_back(std::move(cand));
    }
};

/// Draw one consistent histogram at a fixed order by pairing stubs at the
/// histogram level.  Returns nullopt when the draw hits a cap dead end.
inline std::optional<EdgeClassHistogram> sample_histogram(int lo, int hi, std::int64_t order,
                                                          const std::optional<DegreePair>& forbidden,
                                                          std::mt19937_64& rng) {
    const int W = hi - lo + 1;
    std::vector<std::int64_t> nd(static_cast<std::size_t>(W), 0);
    std::uniform_int_distribution<int> pick_degree(lo, hi);
    std::int64_t stubs_total = 0;
    for (std::int64_t i = 0; i < order; ++i) {
        const int d = pick_degree(rng);
        ++nd[static_cast<std::size_t>(d - lo)];
        stubs_total += d;
    }
    if (stubs_total % 2 != 0) {
        // move one vertex up or down a degree to fix parity
        for (int d = lo; d < hi; ++d) {
            auto& here = nd[static_cast<std::size_t>(d - lo)];
            if (here > 0) {
                --here;
                ++nd[static_cast<std::size_t>(d + 1 - lo)];
                ++stubs_total;
                break;
            }
        }
        if (stubs_total % 2 != 0) return std::nullopt;
    }
    std::vector<std::int64_t> stubs(static_cast<std::size_t>(W));
    for (int d = lo; d <= hi; ++d)
        stubs[static_cast<std::size_t>(d - lo)] = static_cast<std::int64_t>(d) * nd[static_cast<std::size_t>(d - lo)];
    std::map<DegreePair, std::int64_t> classes;
    auto cap_of = [&](int i, int j) {
        const std::int64_t ni = nd[static_cast<std::size_t>(i - lo)];
        const std::int64_t nj = nd[static_cast<std::size_t>(j - lo)];
        return i == j ? ni * (ni - 1) / 2 : ni * nj;
    };
    std::int64_t remaining = stubs_total;
    int dead_ends = 0;
    while (remaining > 0) {
        // choose a stub uniformly, then a partner stub uniformly
        std::uniform_int_distribution<std::int64_t> pick(1, remaining);
        auto locate = [&](std::int64_t ticket) {
            for (int d = lo; d <= hi; ++d) {
                const std::int64_t s = stubs[static_cast<std::size_t>(d - lo)];
                if (ticket <= s) return d;
                ticket -= s;
            }
            return hi;
        };
        const int i = locate(pick(rng));
        const int j = locate(pick(rng));
        if (i == j && stubs[static_cast<std::size_t>(i - lo)] < 2) {
            if (++dead_ends > 64) return std::nullopt;
            continue;
        }
        const DegreePair cls = make_class(i, j);
        if (forbidden && cls == *forbidden) {
            if (++dead_ends > 64) return std::nullopt;
            continue;
        }
        if (classes[cls] + 1 > cap_of(cls.lo, cls.hi)) {
            if (++dead_ends > 64) return std::nullopt;
            continue;
        }
        ++classes[cls];
        --stubs[static_cast<std::size_t>(i - lo)];
        --stubs[static_cast<std::size_t>(j - lo)];
        remaining -= 2;
        dead_ends = 0;
    }
    std::map<int, std::int64_t> counts;
    for (int d = lo; d <= hi; ++d)
        if (nd[static_cast<std::size_t>(d - lo)] > 0) counts[d] = nd[static_cast<std::size_t>(d - lo)];
    if (classes.empty()) return std::nullopt;
    EdgeClassHistogram h(std::move(classes), std::move(counts));
    if (!h.consistent()) return std::nullopt;
    return h;
}

} // namespace detail

/// Enumerate (small orders) or sample (large orders) consistent histograms
/// over the configured degree window and return the ones with a positive
/// gap, sorted by order then by gap descending.  Inside the window [2,5] the
/// necessary conditions (a {2,5} edge and a {3,3} edge present) are applied
/// as a hard filter; they are provable requirements there, so nothing real
/// is lost.
inline std::vector<HistogramCandidate> histogram_search(const SearchConfig& cfg) {
    cfg.validate();
    const bool window_rules_apply = cfg.degree_hi - cfg.degree_lo <= 3;
    std::vector<HistogramCandidate> results;
    std::set<std::string> seen;

    const std::int64_t exhaustive_hi = std::min(cfg.order_hi, cfg.exhaustive_order_limit);
    if (cfg.order_lo <= exhaustive_hi) {
        detail::HistogramEnumerator en;
        en.lo = cfg.degree_lo;
        en.hi = cfg.degree_hi;
        en.forbidden = cfg.forbidden_class;
        en.necessary_condition_filter = window_rules_apply && cfg.degree_lo == 2 && cfg.degree_hi == 5;
        for (std::int64_t order = cfg.order_lo; order <= exhaustive_hi; ++order) en.run(order);
        for (auto& cand : en.out) {
            if (seen.insert(detail::histogram_key(cand.histogram)).second)
                results.push_back(std::move(cand));
        }
    }

    if (cfg.order_hi > cfg.exhaustive_order_limit) {
        // annealed walk over histograms: the move replaces one edge of class
        // {i,j} and one of {k,l} by classes {i,k},{j,l} (or {i,l},{j,k}),
        // which preserves every per-degree stub total, hence consistency
        const std::int64_t sample_lo = std::max(cfg.order_lo, cfg.exhaustive_order_limit + 1);
        const std::int64_t steps_per_restart = std::max<std::int64_t>(1, cfg.swap_budget / cfg.restarts);
        const bool filter = window_rules_apply && cfg.degree_lo == 2 && cfg.degree_hi == 5;
        for (int restart = 0; restart < cfg.restarts; ++restart) {
            std::mt19937_64 rng(detail::mix_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(restart)));
            std::uniform_int_distribution<std::int64_t> pick_order(sample_lo, cfg.order_hi);
            std::optional<EdgeClassHistogram> start;
            for (int tries = 0; tries < 32 && !start; ++tries)
                start = detail::sample_histogram(cfg.degree_lo, cfg.degree_hi, pick_order(rng),
                                                 cfg.forbidden_class, rng);
            if (!start) continue;
            std::map<DegreePair, std::int64_t> classes = start->edge_classes();
            const std::map<int, std::int64_t> counts = start->degree_counts();
            const int128 n = start->total_vertices();
            auto cap_of = [&](const DegreePair& c) {
                const auto ni = counts.count(c.lo) ? counts.at(c.lo) : 0;
                const auto nj = counts.count(c.hi) ? counts.at(c.hi) : 0;
                return c.lo == c.hi ? ni * (ni - 1) / 2 : ni * nj;
            };
            int128 gap = histogram_gap(*start);
            double temp = cfg.temperature;
            std::uniform_real_distribution<double> coin(0.0, 1.0);
            auto record = [&] {
                EdgeClassHistogram h(classes, counts);
                if (!h.consistent()) return;
                if (filter && (h.edge_count(2, 5) == 0 || h.edge_count(3, 3) == 0)) return;
                if (seen.insert(detail::histogram_key(h)).second)
                    results.push_back(make_candidate(std::move(h)));
            };
            if (gap > 0) record();
            for (std::int64_t step = 0; step < steps_per_restart; ++step, temp *= cfg.cooling) {
                std::vector<DegreePair> present;
                present.reserve(classes.size());
                for (const auto& [cls, count] : classes)
                    if (count > 0) present.push_back(cls);
                if (present.empty()) break;
                std::uniform_int_distribution<std::size_t> pick(0, present.size() - 1);
                const DegreePair a = present[pick(rng)];
                const DegreePair b = present[pick(rng)];
                if (a == b && classes[a] < 2) continue;
                const bool cross = (rng() & 1) != 0;
                const DegreePair c1 = cross ? make_class(a.lo, b.lo) : make_class(a.lo, b.hi);
                const DegreePair c2 = cross ? make_class(a.hi, b.hi) : make_class(a.hi, b.lo);
                if (cfg.forbidden_class && (c1 == *cfg.forbidden_class || c2 == *cfg.forbidden_class))
                    continue;
                std::map<DegreePair, std::int64_t> next = classes;
                if (--next[a] == 0) next.erase(a);
                if (next.count(b)) { if (--next[b] == 0) next.erase(b); }
                else continue;  // a == b consumed both; already guarded above
                ++next[c1];
                ++next[c2];
                if (next[c1] > cap_of(c1) || next[c2] > cap_of(c2)) continue;
                const int128 old_m2 = checked_mul(static_cast<int128>(a.lo), a.hi) +
                                      checked_mul(static_cast<int128>(b.lo), b.hi);
                const int128 new_m2 = checked_mul(static_cast<int128>(c1.lo), c1.hi) +
                                      checked_mul(static_cast<int128>(c2.lo), c2.hi);
                const int128 delta_gap = checked_mul(n, checked_sub(old_m2, new_m2));
                const bool accept = delta_gap >= 0 ||
                                    coin(rng) < std::exp(static_cast<double>(static_cast<long long>(
                                                             std::max<int128>(delta_gap, -1000000))) /
                                                         std::max(temp, 1e-9));
                if (!accept) continue;
                classes = std::move(next);
                gap = checked_add(gap, delta_gap);
                if (gap > 0) record();
            }
        }
    }

    std::sort(results.begin(), results.end(), [](const HistogramCandidate& a, const HistogramCandidate& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.gap != b.gap) return a.gap > b.gap;
        return detail::histogram_key(a.histogram) < detail::histogram_key(b.histogram);
    });
    return results;
}

/// Build a concrete graph with exactly the given histogram: group vertices
/// by degree, hand out shuffled stubs class by class, then clear loops and
/// duplicate edges by partner swaps *within the same class*, which cannot
/// change the histogram.  Failure is a real outcome — not every consistent
/// histogram is realizable as a simple graph.
inline Graph realize_histogram(const EdgeClassHistogram& h, std::uint64_t seed,
                               int max_rounds = 500) {
    h.validate();
    std::mt19937_64 rng(seed);

    std::map<int, std::vector<Vertex>> members;
    Vertex next_id = 0;
    for (const auto& [deg, count] : h.degree_counts()) {
        auto& ids = members[deg];
        for (std::int64_t i = 0; i < count; ++i) ids.push_back(next_id++);
    }
    const Vertex n = next_id;

    struct ClassedEdge {
        Vertex a = 0;  // endpoint on the cls.lo side
        Vertex b = 0;  // endpoint on the cls.hi side
        DegreePair cls;
    };

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::map<int, std::vector<Vertex>> stubs;
        for (const auto& [deg, ids] : members) {
            auto& pool = stubs[deg];
            for (Vertex v : ids) pool.insert(pool.end(), static_cast<std::size_t>(deg), v);
            std::shuffle(pool.begin(), pool.end(), rng);
        }
        std::map<int, std::size_t> cursor;
        std::vector<ClassedEdge> edges;
        std::map<DegreePair, std::vector<std::size_t>> by_class;
        for (const auto& [cls, count] : h.edge_classes()) {
            for (std::int64_t t = 0; t < count; ++t) {
                ClassedEdge e;
                e.cls = cls;
                e.a = stubs[cls.lo][cursor[cls.lo]++];
                e.b = stubs[cls.hi][cursor[cls.hi]++];
                by_class[cls].push_back(edges.size());
                edges.push_back(e);
            }
        }

        auto normalized = [](const ClassedEdge& e) {
            return Edge{std::min(e.a, e.b), std::max(e.a, e.b)};
        };
        bool ok = false;
        for (int round = 0; round < max_rounds; ++round) {
            std::map<Edge, int> mult;
            std::vector<std::size_t> bad;
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].a == edges[i].b) {
                    bad.push_back(i);
                    continue;
                }
                if (++mult[normalized(edges[i])] > 1) bad.push_back(i);
            }
            if (bad.empty()) {
                ok = true;
                break;
            }
            for (std::size_t i : bad) {
                const auto& pool = by_class[edges[i].cls];
                std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
                const std::size_t j = pool[pick(rng)];
                if (edges[i].cls.lo == edges[i].cls.hi && (rng() & 1))
                    std::swap(edges[j].a, edges[j].b);
                std::swap(edges[i].b, edges[j].b);
            }
        }
        if (!ok) continue;

        std::vector<Edge> plain;
        plain.reserve(edges.size());
        for (const auto& e : edges) plain.push_back(normalized(e));
        Graph g(n, plain);
        if (!(edge_class_histogram(g) == h))
            throw error("internal error: realized graph does not match its histogram");
        return g;
    }
    throw realization_failure_error("could not realize the histogram as a simple graph");
}

struct SwapTrace {
    std::int64_t steps = 0;
    std::int64_t accepted = 0;
    std::int64_t improvements = 0;
    std::int64_t rejected_conflict = 0;
    std::int64_t rejected_forbidden = 0;
    std::int64_t rejected_disconnected = 0;
};

struct SearchOutcome {
    Graph best{1, {}};
    IndexReport best_report;
    bool violation_found = false;
    bool budget_exhausted = false;
    SwapTrace trace;
    std::vector<Certificate> certificates;       // verified, deduplicated
    std::set<std::string> canonical_forms;       // of every violating graph seen
};

/// Degree-preserving double-edge-swap walk.  Degrees never change, so n, m,
/// M1 and all class counts at the vertex level are fixed; only M2 moves.
/// Minimizing M2 maximizes the gap m*M1 - n*M2.  Every violating graph
/// encountered is certificate-verified before it is reported.
inline SearchOutcome local_search(const Graph& g0, const SearchConfig& cfg) {
    cfg.validate();
    auto [dmin, dmax] = g0.degree_extremes();
    if (dmin < cfg.degree_lo || dmax > cfg.degree_hi)
        throw degree_window_error("start graph leaves the configured degree window");

    const IndexReport r0 = index_report(g0);
    const int128 n = r0.n;
    const int128 m = r0.m;
    const int128 m1 = r0.m1;

    std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(g0.order()));
    for (const auto& [u, v] : g0.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<Edge> edges = g0.edges();
    std::vector<int> deg(static_cast<std::size_t>(g0.order()));
    for (Vertex v = 0; v < g0.order(); ++v) deg[static_cast<std::size_t>(v)] = g0.degree(v);

    auto connected = [&] {
        std::vector<char> vis(adj.size(), 0);
        std::vector<Vertex> stack{0};
        vis[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : adj[static_cast<std::size_t>(u)])
                if (!vis[static_cast<std::size_t>(w)]) {
                    vis[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == adj.size();
    };

    SearchOutcome out;
    out.best = g0;
    out.best_report = r0;
    int128 m2 = r0.m2;
    int128 best_m2 = m2;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double temp = cfg.temperature;
    bool enforcing_connectivity = cfg.require_connected && g0.is_connected();

    auto current_gap = [&](int128 m2_now) { return checked_sub(checked_mul(m, m1), checked_mul(n, m2_now)); };
    auto note_violation = [&](const std::vector<Edge>& edge_list, std::int64_t step) {
        Graph g(g0.order(), edge_list);
        const std::string canon = canonical_graph6(g);
        if (!out.canonical_forms.insert(canon).second) return;
        Certificate cert = make_certificate(
            g, "local-search seed=" + std::to_string(cfg.seed) + " step=" + std::to_string(step) +
                   (g.is_connected() ? " connected" : " disconnected"));
        const CertificateCheck check = verify_certificate(cert);
        if (!check.accepted())
            throw error("internal error: search emitted an unverifiable certificate: " + check.reason);
        out.certificates.push_back(std::move(cert));
    };

    if (current_gap(m2) > 0) {
        out.violation_found = true;
        note_violation(edges, 0);
    }

    const bool collect_all = cfg.objective == SearchObjective::count_at_order;
    std::uniform_int_distribution<std::size_t> pick_edge(0, edges.empty() ? 0 : edges.size() - 1);
    for (std::int64_t step = 1; step <= cfg.swap_budget && edges.size() >= 2; ++step, temp *= cfg.cooling) {
        ++out.trace.steps;
        const std::size_t i = pick_edge(rng);
        const std::size_t j = pick_edge(rng);
        if (i == j) {
            ++out.trace.rejected_conflict;
            continue;
        }
        const auto [a, b] = edges[i];
        const auto [c, d] = edges[j];
        if (a == c || a == d || b == c || b == d) {
            ++out.trace.rejected_conflict;
            continue;
        }
        Vertex p1 = a, q1 = 0, p2 = b, q2 = 0;
        if ((rng() & 1) != 0) {
            q1 = c;
            q2 = d;
        } else {
            q1 = d;
            q2 = c;
        }
        if (adj[static_cast<std::size_t>(p1)].count(q1) || adj[static_cast<std::size_t>(p2)].count(q2)) {
            ++out.trace.rejected_conflict;
            continue;
        }
        if (cfg.forbidden_class) {
            const DegreePair k1 = make_class(deg[static_cast<std::size_t>(p1)], deg[static_cast<std::size_t>(q1)]);
            const DegreePair k2 = make_class(deg[static_cast<std::size_t>(p2)], deg[static_cast<std::size_t>(q2)]);
            if (k1 == *cfg.forbidden_class || k2 == *cfg.forbidden_class) {
                ++out.trace.rejected_forbidden;
                continue;
            }
        }
        const int128 da = deg[static_cast<std::size_t>(a)], db = deg[static_cast<std::size_t>(b)];
        const int128 dc = deg[static_cast<std::size_t>(c)], dd = deg[static_cast<std::size_t>(d)];
        const int128 dq1 = deg[static_cast<std::size_t>(q1)], dq2 = deg[static_cast<std::size_t>(q2)];
        const int128 delta_m2 = (da * dq1 + db * dq2) - (da * db + dc * dd);
        const int128 delta_gap = checked_mul(n, -delta_m2);
        const bool accept =
            delta_gap >= 0 ||
            coin(rng) < std::exp(static_cast<double>(static_cast<long long>(
                                     std::max<int128>(delta_gap, -1000000))) /
                                 std::max(temp, 1e-9));
        if (!accept) continue;

        auto apply = [&](bool forward) {
            if (forward) {
                adj[static_cast<std::size_t>(a)].erase(b);
                adj[static_cast<std::size_t>(b)].erase(a);
                adj[static_cast<std::size_t>(c)].erase(d);
                adj[static_cast<std::size_t>(d)].erase(c);
                adj[static_cast<std::size_t>(p1)].insert(q1);
                adj[static_cast<std::size_t>(q1)].insert(p1);
                adj[static_cast<std::size_t>(p2)].insert(q2);
                adj[static_cast<std::size_t>(q2)].insert(p2);
                edges[i] = {std::min(p1, q1), std::max(p1, q1)};
                edges[j] = {std::min(p2, q2), std::max(p2, q2)};
            } else {
                adj[static_cast<std::size_t>(p1)].erase(q1);
                adj[static_cast<std::size_t>(q1)].erase(p1);
                adj[static_cast<std::size_t>(p2)].erase(q2);
                adj[static_cast<std::size_t>(q2)].erase(p2);
                adj[static_cast<std::size_t>(a)].insert(b);
                adj[static_cast<std::size_t>(b)].insert(a);
                adj[static_cast<std::size_t>(c)].insert(d);
                adj[static_cast<std::size_t>(d)].insert(c);
                edges[i] = {std::min(a, b), std::max(a, b)};
                edges[j] = {std::min(c, d), std::max(c, d)};
            }
        };
        apply(true);
        if (cfg.require_connected) {
            // reject swaps that break connectivity once it holds; a
            // disconnected start is allowed to drift until it connects
            const bool now_connected = connected();
            if (enforcing_connectivity && !now_connected) {
                apply(false);
                ++out.trace.rejected_disconnected;
                continue;
            }
            enforcing_connectivity = enforcing_connectivity || now_connected;
        }
        // degree preservation tripwire around the four touched vertices
        for (Vertex v : {a, b, c, d})
            if (static_cast<int>(adj[static_cast<std::size_t>(v)].size()) != deg[static_cast<std::size_t>(v)])
                throw error("internal error: swap changed a vertex degree");
        ++out.trace.accepted;
        m2 = checked_add(m2, delta_m2);

        const int128 gap_now = current_gap(m2);
        if (gap_now > 0) {
            out.violation_found = true;
            if (collect_all && out.canonical_forms.size() < 10000) note_violation(edges, step);
        }
        if (m2 < best_m2) {
            best_m2 = m2;
            ++out.trace.improvements;
            out.best = Graph(g0.order(), edges);
            out.best_report = index_report(out.best);
            if (gap_now > 0 && !collect_all) note_violation(edges, step);
        }
    }
    out.budget_exhausted = !out.violation_found;
    return out;
}

struct DistinctCount {
    std::int64_t order = 0;
    std::int64_t count = 0;  // a lower bound: distinct verified violations found
    std::vector<Certificate> certificates;
    std::set<std::string> canonical_forms;
};

/// Multi-restart search at one fixed order, deduplicated by canonical form.
/// The result is a lower bound on the number of non-isomorphic violations at
/// that order — never a completeness claim.
inline DistinctCount count_distinct(std::int64_t order, SearchConfig cfg) {
    cfg.order_lo = order;
    cfg.order_hi = order;
    cfg.objective = SearchObjective::count_at_order;
    cfg.validate();

    DistinctCount out;
    out.order = order;
    auto absorb = [&](const Graph& g, const std::string& provenance) {
        if (cfg.require_connected && !g.is_connected()) return;
        const std::string canon = canonical_graph6(g);
        if (!out.canonical_forms.insert(canon).second) return;
        Certificate cert = make_certificate(g, provenance);
        const CertificateCheck check = verify_certificate(cert);
        if (!check.accepted())
            throw error("internal error: search emitted an unverifiable certificate: " + check.reason);
        out.certificates.push_back(std::move(cert));
    };

    const std::vector<HistogramCandidate> candidates = histogram_search(cfg);
    const std::int64_t walk_budget =
        std::max<std::int64_t>(1, cfg.swap_budget / std::max<std::size_t>(1, candidates.size()));
    std::uint64_t salt = 0;
    for (const auto& cand : candidates) {
        for (int restart = 0; restart < cfg.restarts; ++restart) {
            ++salt;
            Graph g{1, {}};
            try {
                g = realize_histogram(cand.histogram, detail::mix_seed(cfg.seed, salt));
            } catch (const realization_failure_error&) {
                continue;
            }
            absorb(g, "histogram-search order=" + std::to_string(order) +
                          " window=[" + std::to_string(cfg.degree_lo) + "," +
                          std::to_string(cfg.degree_hi) + "] seed=" + std::to_string(cfg.seed) +
                          " salt=" + std::to_string(salt));
            SearchConfig walk = cfg;
            walk.swap_budget = walk_budget;
            walk.seed = detail::mix_seed(cfg.seed, salt ^ 0xabcdULL);
            SearchOutcome walked = local_search(g, walk);
            for (const auto& cert : walked.certificates) {
                const Graph wg = decode_graph6(cert.graph6);
                absorb(wg, cert.provenance);
            }
        }
    }
    out.count = static_cast<std::int64_t>(out.certificates.size());
    return out;
}

struct SearchRun {
    SearchConfig config;
    std::vector<Certificate> certificates;
    std::int64_t distinct_found = 0;
    std::optional<std::int64_t> smallest_violation_order;
    bool truncated = false;
    std::string note;
};

/// Orchestrates the two-level pipeline for the configured objective.
inline SearchRun run_search(const SearchConfig& cfg) {
    cfg.validate();
    SearchRun run;
    run.config = cfg;
    switch (cfg.objective) {
        case SearchObjective::minimize_order: {
            for (std::int64_t order = cfg.order_lo; order <= cfg.order_hi; ++order) {
                DistinctCount found = count_distinct(order, cfg);
                if (found.count > 0) {
                    run.certificates = std::move(found.certificates);
                    run.distinct_found = found.count;
                    run.smallest_violation_order = order;
                    run.note = "stopped at the smallest order with a verified violation";
                    return run;
                }
            }
            run.note = "no violation found in the configured order range";
            return run;
        }
        case SearchObjective::count_at_order: {
            DistinctCount found = count_distinct(cfg.order_hi, cfg);
            run.certificates = std::move(found.certificates);
            run.distinct_found = found.count;
            if (found.count > 0) run.smallest_violation_order = cfg.order_hi;
            run.note = "distinct count is a lower bound (search, not enumeration)";
            return run;
        }
        case SearchObjective::maximize_gap_at_order: {
            DistinctCount found = count_distinct(cfg.order_hi, cfg);
            const Certificate* best = nullptr;
            for (const auto& cert : found.certificates)
                if (!best || cert.gap > best->gap) best = &cert;
            if (best) {
                run.certificates.push_back(*best);
                run.distinct_found = found.count;
                run.smallest_violation_order = cfg.order_hi;
                run.note = "best gap among " + std::to_string(found.count) + " distinct violations";
            } else {
                run.note = "no violation found at the requested order";
            }
            return run;
        }
    }
    throw bad_parameter_error("unknown search objective");
}

} // namespace zagreb
