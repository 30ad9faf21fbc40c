#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "zagreb/closed_forms.hpp"
#include "zagreb/histogram.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/rational.hpp"

namespace zagreb {

enum class ComparisonVerdict { holds_strict, equality, violated };

inline ComparisonVerdict verdict_from_gap(int128 gap) {
    if (gap > 0) return ComparisonVerdict::violated;
    if (gap == 0) return ComparisonVerdict::equality;
    return ComparisonVerdict::holds_strict;
}

inline ComparisonVerdict comparison_verdict(const Graph& g) {
    return verdict_from_gap(zagreb_gap(g));
}

inline std::string verdict_name(ComparisonVerdict v) {
    switch (v) {
        case ComparisonVerdict::holds_strict: return "holds";
        case ComparisonVerdict::equality: return "equality";
        case ComparisonVerdict::violated: return "violated";
    }
    return "unknown";
}

/// Index values depend on the graph only through its edge-class histogram,
/// so all of them can be computed from the histogram directly.
inline int128 histogram_first_zagreb(const EdgeClassHistogram& h) {
    h.validate();
    int128 sum = 0;
    for (const auto& [deg, count] : h.degree_counts()) {
        int128 d = deg;
        sum = checked_add(sum, checked_mul(checked_mul(d, d), static_cast<int128>(count)));
    }
    return sum;
}

inline int128 histogram_second_zagreb(const EdgeClassHistogram& h) {
    h.validate();
    int128 sum = 0;
    for (const auto& [cls, count] : h.edge_classes()) {
        int128 prod = checked_mul(static_cast<int128>(cls.lo), static_cast<int128>(cls.hi));
        sum = checked_add(sum, checked_mul(prod, static_cast<int128>(count)));
    }
    return sum;
}

inline int128 histogram_gap(const EdgeClassHistogram& h) {
    int128 m1 = histogram_first_zagreb(h);
    int128 m2 = histogram_second_zagreb(h);
    return checked_sub(checked_mul(static_cast<int128>(h.total_edges()), m1),
                       checked_mul(static_cast<int128>(h.total_vertices()), m2));
}

/// What the closed forms say about a histogram whose degrees fit in a window
/// [d, d+3].  Outside such a window they say nothing.
struct WindowAnalysis {
    int min_degree = 0;
    int max_degree = 0;
    bool within_window = false;      // max_degree <= min_degree + 3
    bool violation_possible = true;  // false when the comparison provably holds
    std::string reason;
};

inline WindowAnalysis analyze_window(const EdgeClassHistogram& h) {
    h.validate();
    WindowAnalysis out;
    out.min_degree = h.degree_counts().begin()->first;
    out.max_degree = h.degree_counts().rbegin()->first;
    out.within_window = out.max_degree <= out.min_degree + 3;
    if (!out.within_window) {
        out.violation_possible = true;
        out.reason = "degree spread exceeds 3; the window closed forms do not apply";
        return out;
    }
    if (out.min_degree != 2) {
        out.violation_possible = false;
        out.reason = "all class pair terms are nonnegative when the window base is not 2";
        return out;
    }
    bool has_25 = h.edge_count(2, 5) > 0;
    bool has_33 = h.edge_count(3, 3) > 0;
    if (has_25 && has_33) {
        out.violation_possible = true;
        out.reason = "window base 2 with both a {2,5} and a {3,3} edge; the lone negative "
                     "term is active";
    } else {
        out.violation_possible = false;
        out.reason = has_25 ? "no {3,3} edge, so the lone negative term is absent"
                            : "no {2,5} edge, so the lone negative term is absent";
    }
    return out;
}

/// The characterized equality patterns: a single edge class, or one of the
/// two class pairs whose interaction term vanishes.
enum class EqualityPattern { none, single_class, one_four_two_two, three_six_four_four, other };

inline EqualityPattern match_equality_pattern(const std::set<DegreePair>& families) {
    static const std::set<DegreePair> low{make_class(1, 4), make_class(2, 2)};
    static const std::set<DegreePair> high{make_class(3, 6), make_class(4, 4)};
    if (families.size() == 1) return EqualityPattern::single_class;
    if (families == low) return EqualityPattern::one_four_two_two;
    if (families == high) return EqualityPattern::three_six_four_four;
    return EqualityPattern::other;
}

inline std::string equality_pattern_name(EqualityPattern p) {
    switch (p) {
        case EqualityPattern::none: return "none";
        case EqualityPattern::single_class: return "single-class";
        case EqualityPattern::one_four_two_two: return "{{1,4},{2,2}}";
        case EqualityPattern::three_six_four_four: return "{{3,6},{4,4}}";
        case EqualityPattern::other: return "other";
    }
    return "unknown";
}

/// Known sufficient patterns for exact equality.
inline bool known_equality_pattern(const std::set<DegreePair>& families) {
    return match_equality_pattern(families) != EqualityPattern::other;
}

inline bool known_equality_pattern(const Graph& g) {
    return known_equality_pattern(family_set(g));
}

/// Full classification of one graph against the comparison M1/n <= M2/m.
/// Connectivity is reported but never required; the well-known small
/// violation S_6 u C_3 is itself disconnected.
struct ConjectureVerdict {
    ComparisonVerdict status = ComparisonVerdict::holds_strict;
    IndexReport report;
    std::set<DegreePair> families;
    EqualityPattern equality_pattern = EqualityPattern::none;
    bool connected = false;
};

inline ConjectureVerdict classify_conjecture(const Graph& g) {
    ConjectureVerdict out;
    out.report = index_report(g);
    out.status = verdict_from_gap(out.report.gap);
    out.families = family_set(g);
    out.connected = g.is_connected();
    if (out.status == ComparisonVerdict::equality)
        out.equality_pattern = match_equality_pattern(out.families);
    // soundness tripwire: inside a window where the closed forms forbid a
    // violation, one can never be observed
    WindowAnalysis window = analyze_window(edge_class_histogram(g));
    if (!window.violation_possible && out.status == ComparisonVerdict::violated)
        throw error("internal error: violation observed where the closed forms forbid one");
    return out;
}

/// The four conditions every violation with degree spread <= 3 must satisfy.
struct CorollaryReport {
    bool min_degree_two = false;
    bool max_degree_five = false;
    bool has_two_five_edge = false;
    bool has_three_three_edge = false;
    int128 gap = 0;

    bool all_hold() const {
        return min_degree_two && max_degree_five && has_two_five_edge && has_three_three_edge;
    }
};

inline CorollaryReport corollary_conditions(const Graph& g) {
    auto [lo, hi] = g.degree_extremes();
    if (hi - lo > 3)
        throw degree_window_error("necessary conditions apply only when the degree spread is <= 3");
    EdgeClassHistogram h = edge_class_histogram(g);
    CorollaryReport out;
    out.min_degree_two = lo == 2;
    out.max_degree_five = hi == 5;
    out.has_two_five_edge = h.edge_count(2, 5) > 0;
    out.has_three_three_edge = h.edge_count(3, 3) > 0;
    out.gap = histogram_gap(h);
    if (out.gap > 0 && !out.all_hold())
        throw error("internal error: violation without the four necessary conditions");
    return out;
}

// ---------------------------------------------------------------------------
// Bridge joins: take a graph whose edges are all class {2,5} and a 3-regular
// graph, and connect them with one new edge from a degree-2 vertex to any
// vertex of the cubic side.  The joined indices depend only on the two edge
// counts m1 and m2.
// ---------------------------------------------------------------------------

inline int128 bridge_join_first_zagreb(int128 m1, int128 m2) {
    // seven units of M1 per {2,5} edge, six per cubic edge, plus the local
    // change around the new bridge
    return checked_add(checked_add(checked_mul(static_cast<int128>(7), m1),
                                   checked_mul(static_cast<int128>(6), m2)),
                       static_cast<int128>(12));
}

inline int128 bridge_join_second_zagreb(int128 m1, int128 m2) {
    return checked_add(checked_add(checked_mul(static_cast<int128>(10), m1),
                                   checked_mul(static_cast<int128>(9), m2)),
                       static_cast<int128>(31));
}

/// Exact gap of the bridge join: (m1*m2 + 360 - 81*m1 - 80*m2) / 30.
inline Rational bridge_join_gap(int128 m1, int128 m2) {
    int128 num = checked_mul(m1, m2);
    num = checked_add(num, static_cast<int128>(360));
    num = checked_sub(num, checked_mul(static_cast<int128>(81), m1));
    num = checked_sub(num, checked_mul(static_cast<int128>(80), m2));
    return {num, 30};
}

/// The join violates the comparison exactly when m1*m2 + 360 > 81*m1 + 80*m2.
inline bool bridge_violation_condition(int128 m1, int128 m2) {
    return bridge_join_gap(m1, m2).sign() > 0;
}

// ---------------------------------------------------------------------------
// Minimal-order scan.  The ladder-like family xi_{2k+1} has 10(k+1) edges,
// all of class {2,5}; a cubic partner of order h has 3h/2 edges.  For k >= 8
// the violation condition becomes h > (54k + 30)/(k - 7), and the partner
// order must be even and at least 4.  Scanning k trades a longer ladder
// against a smaller admissible partner.
// ---------------------------------------------------------------------------

inline int128 floor_div(int128 a, int128 b) {
    if (b == 0) throw bad_parameter_error("floor_div by zero");
    if (b < 0) { a = checked_neg(a); b = checked_neg(b); }
    int128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

/// Least partner order: smallest even h with h > (54k + 30)/(k - 7), h >= 4.
inline Rational cubic_order_threshold(int k) {
    if (k < 8) throw bad_parameter_error("threshold requires k >= 8");
    return {static_cast<int128>(54) * k + 30, static_cast<int128>(k) - 7};
}

inline std::int64_t least_cubic_order(int k) {
    Rational t = cubic_order_threshold(k);
    int128 h = floor_div(t.numerator(), t.denominator()) + 1;  // least integer strictly above t
    if (h % 2 != 0) h += 1;
    if (h < 4) h = 4;
    return to_int64(h);
}

struct ScanRow {
    int k = 0;
    std::int64_t ladder_order = 0;   // 7(k+1)
    Rational threshold;              // (54k + 30)/(k - 7)
    std::int64_t cubic_order = 0;    // least admissible even order
    std::int64_t total_order = 0;    // ladder_order + cubic_order
    Rational gap;                    // bridge_join_gap at those sizes; > 0 by construction
};

struct ScanResult {
    std::vector<ScanRow> rows;
    int best_k = 0;
    std::int64_t best_total_order = 0;
    bool best_unique = false;
};

inline ScanResult minimal_order_scan(int k_lo, int k_hi) {
    if (k_lo < 8 || k_hi < k_lo)
        throw bad_parameter_error("scan requires 8 <= k_lo <= k_hi");
    ScanResult out;
    for (int k = k_lo; k <= k_hi; ++k) {
        ScanRow row;
        row.k = k;
        row.ladder_order = 7LL * (k + 1);
        row.threshold = cubic_order_threshold(k);
        row.cubic_order = least_cubic_order(k);
        row.total_order = row.ladder_order + row.cubic_order;
        row.gap = bridge_join_gap(static_cast<int128>(10) * (k + 1),
                                  static_cast<int128>(3) * row.cubic_order / 2);
        out.rows.push_back(row);
    }
    out.best_k = out.rows.front().k;
    out.best_total_order = out.rows.front().total_order;
    out.best_unique = true;
    for (std::size_t i = 1; i < out.rows.size(); ++i) {
        if (out.rows[i].total_order < out.best_total_order) {
            out.best_total_order = out.rows[i].total_order;
            out.best_k = out.rows[i].k;
            out.best_unique = true;
        } else if (out.rows[i].total_order == out.best_total_order) {
            out.best_unique = false;
        }
    }
    return out;
}

} // namespace zagreb
