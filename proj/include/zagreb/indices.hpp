#pragma once

#include <cstdint>

#include "zagreb/graph.hpp"
#include "zagreb/histogram.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

/// First Zagreb index: sum of squared vertex degrees.
inline int128 first_zagreb_index(const Graph& g) {
    require_no_isolated(g);
    int128 sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        int128 d = g.degree(v);
        sum = checked_add(sum, checked_mul(d, d));
    }
    return sum;
}

/// Second Zagreb index: sum over edges of the endpoint degree product.
inline int128 second_zagreb_index(const Graph& g) {
    require_no_isolated(g);
    int128 sum = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        int128 du = g.degree(u);
        for (Vertex v : g.neighbors(u))
            if (u < v) sum = checked_add(sum, checked_mul(du, g.degree(v)));
    }
    return sum;
}

/// m*M1 - n*M2. Positive exactly when M1/n > M2/m, i.e. when the graph
/// violates the comparison M1/n <= M2/m.
inline int128 zagreb_gap(const Graph& g) {
    int128 m1 = first_zagreb_index(g);
    int128 m2 = second_zagreb_index(g);
    return checked_sub(checked_mul(g.size(), m1), checked_mul(g.order(), m2));
}

/// Everything needed to decide the comparison for one graph, all exact.
struct IndexReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    int128 m1 = 0;
    int128 m2 = 0;
    int128 gap = 0;           // m*M1 - n*M2
    Rational slack;           // M2 - (m/n)*M1 == -gap/n
};

inline IndexReport index_report(const Graph& g) {
    IndexReport r;
    r.n = g.order();
    r.m = g.size();
    r.m1 = first_zagreb_index(g);
    r.m2 = second_zagreb_index(g);
    r.gap = checked_sub(checked_mul(r.m, r.m1), checked_mul(r.n, r.m2));
    r.slack = Rational(r.m2) - Rational(r.m, r.n) * Rational(r.m1);
    return r;
}

/// Interaction term of two edge classes {i,j} and {k,l}:
///   ij(1/k + 1/l) + kl(1/i + 1/j) - (i + j + k + l).
/// Symmetric in i<->j, k<->l and under swapping the two classes; its sign
/// pattern over a degree window [d, d+3] decides the comparison there.
inline Rational class_pair_term(int i, int j, int k, int l) {
    if (i < 1 || j < 1 || k < 1 || l < 1)
        throw zero_degree_error("class pair term requires degrees >= 1");
    Rational ij = Rational(static_cast<int128>(i) * j);
    Rational kl = Rational(static_cast<int128>(k) * l);
    Rational out = ij * (Rational(1, k) + Rational(1, l)) + kl * (Rational(1, i) + Rational(1, j));
    return out - Rational(i + j + k + l);
}

inline Rational class_pair_term(const DegreePair& p, const DegreePair& q) {
    return class_pair_term(p.lo, p.hi, q.lo, q.hi);
}

/// M2 - (m/n)*M1; nonnegative exactly when the comparison holds.
inline Rational conjecture_slack(const Graph& g) {
    IndexReport r = index_report(g);
    return r.slack;
}

/// sum over classes of m_{i,j} (1/i + 1/j); always equals the vertex count.
inline Rational harmonic_sum(const EdgeClassHistogram& h) {
    h.validate();
    Rational sum;
    for (const auto& [cls, count] : h.edge_classes())
        sum += Rational(count) * (Rational(1, cls.lo) + Rational(1, cls.hi));
    return sum;
}

/// harmonic_sum(histogram) * slack; equals -gap exactly.
inline Rational scaled_slack(const Graph& g) {
    return harmonic_sum(edge_class_histogram(g)) * conjecture_slack(g);
}

/// The same scaled slack computed as the symmetrized quadratic form
/// (1/2) sum_p sum_q m_p m_q * class_pair_term(p, q) over edge classes.
inline Rational pairwise_quadratic_form(const EdgeClassHistogram& h) {
    h.validate();
    Rational sum;
    const auto& classes = h.edge_classes();
    for (auto p = classes.begin(); p != classes.end(); ++p) {
        // diagonal terms vanish; each unordered pair appears twice in the
        // double sum, cancelling the 1/2
        for (auto q = std::next(p); q != classes.end(); ++q) {
            Rational weight(checked_mul(p->second, q->second));
            sum += weight * class_pair_term(p->first, q->first);
        }
    }
    return sum;
}

} // namespace zagreb
