#include <catch2/catch_amalgamated.hpp>

#include "zagreb/conjecture.hpp"
#include "zagreb/families.hpp"
#include "zagreb/indices.hpp"

#include "support.hpp"

using zagreb::ComparisonVerdict;
using zagreb::EqualityPattern;
using zagreb::Graph;
using zagreb::Rational;

TEST_CASE("verdicts from the integer gap") {
    CHECK(zagreb::verdict_from_gap(-5) == ComparisonVerdict::holds_strict);
    CHECK(zagreb::verdict_from_gap(0) == ComparisonVerdict::equality);
    CHECK(zagreb::verdict_from_gap(3) == ComparisonVerdict::violated);
    CHECK(zagreb::verdict_name(ComparisonVerdict::holds_strict) == "holds");
    CHECK(zagreb::verdict_name(ComparisonVerdict::equality) == "equality");
    CHECK(zagreb::verdict_name(ComparisonVerdict::violated) == "violated");
}

TEST_CASE("histogram index formulas match the direct ones") {
    for (const Graph& g :
         {zagreb::path_graph(6), zagreb::xi(1), zagreb::star_graph(7),
          zagreb::disjoint_union(zagreb::complete_bipartite(2, 5), zagreb::complete_graph(4))}) {
        const auto h = zagreb::edge_class_histogram(g);
        CHECK(zagreb::histogram_first_zagreb(h) == zagreb::first_zagreb_index(g));
        CHECK(zagreb::histogram_second_zagreb(h) == zagreb::second_zagreb_index(g));
        CHECK(zagreb::histogram_gap(h) == zagreb::zagreb_gap(g));
    }
}

TEST_CASE("classification of the three equality shapes") {
    const auto cycle = zagreb::classify_conjecture(zagreb::cycle_graph(9));
    CHECK(cycle.status == ComparisonVerdict::equality);
    CHECK(cycle.equality_pattern == EqualityPattern::single_class);
    CHECK(cycle.connected);

    const auto star_cycle =
        zagreb::classify_conjecture(zagreb::disjoint_union(zagreb::star_graph(5), zagreb::cycle_graph(3)));
    CHECK(star_cycle.status == ComparisonVerdict::equality);
    CHECK(star_cycle.equality_pattern == EqualityPattern::one_four_two_two);
    CHECK(!star_cycle.connected);

    const auto bip_complete = zagreb::classify_conjecture(
        zagreb::disjoint_union(zagreb::complete_bipartite(6, 3), zagreb::complete_graph(5)));
    CHECK(bip_complete.status == ComparisonVerdict::equality);
    CHECK(bip_complete.equality_pattern == EqualityPattern::three_six_four_four);

    CHECK(zagreb::equality_pattern_name(EqualityPattern::single_class) == "single-class");
    CHECK(zagreb::equality_pattern_name(EqualityPattern::one_four_two_two) == "{{1,4},{2,2}}");
    CHECK(zagreb::equality_pattern_name(EqualityPattern::three_six_four_four) == "{{3,6},{4,4}}");
}

TEST_CASE("classification of violations and strict cases") {
    const auto violated = zagreb::classify_conjecture(
        zagreb::disjoint_union(zagreb::star_graph(6), zagreb::cycle_graph(3)));
    CHECK(violated.status == ComparisonVerdict::violated);
    CHECK(violated.report.gap == 3);
    CHECK(violated.equality_pattern == EqualityPattern::none);

    const auto strict = zagreb::classify_conjecture(zagreb::path_graph(4));
    CHECK(strict.status == ComparisonVerdict::holds_strict);
    CHECK(strict.report.gap == -2);
}

TEST_CASE("known equality patterns") {
    CHECK(zagreb::known_equality_pattern(zagreb::cycle_graph(5)));
    CHECK(zagreb::known_equality_pattern(zagreb::complete_graph(7)));
    CHECK(zagreb::known_equality_pattern(
        zagreb::disjoint_union(zagreb::star_graph(5), zagreb::cycle_graph(3))));
    CHECK(!zagreb::known_equality_pattern(zagreb::path_graph(4)));
}

TEST_CASE("window analysis singles out the one dangerous pattern") {
    const auto impossible = zagreb::analyze_window(zagreb::edge_class_histogram(zagreb::xi(1)));
    CHECK(impossible.min_degree == 2);
    CHECK(impossible.max_degree == 5);
    CHECK(impossible.within_window);
    CHECK(!impossible.violation_possible);

    const auto possible = zagreb::analyze_window(zagreb::edge_class_histogram(
        zagreb::disjoint_union(zagreb::complete_bipartite(2, 5), zagreb::complete_graph(4))));
    CHECK(possible.within_window);
    CHECK(possible.violation_possible);

    const auto leaf = zagreb::analyze_window(zagreb::edge_class_histogram(zagreb::path_graph(4)));
    CHECK(!leaf.violation_possible);  // minimum degree 1, no negative term exists

    const auto wide = zagreb::analyze_window(zagreb::edge_class_histogram(
        zagreb::disjoint_union(zagreb::star_graph(8), zagreb::cycle_graph(3))));
    CHECK(!wide.within_window);  // spread exceeds three
}

TEST_CASE("necessary conditions for a violation in the narrow window") {
    const auto ok = zagreb::corollary_conditions(
        zagreb::disjoint_union(zagreb::complete_bipartite(2, 5), zagreb::complete_graph(4)));
    CHECK(ok.min_degree_two);
    CHECK(ok.max_degree_five);
    CHECK(ok.has_two_five_edge);
    CHECK(ok.has_three_three_edge);
    CHECK(ok.gap == 2);
    CHECK(ok.all_hold());

    const auto cyc = zagreb::corollary_conditions(zagreb::cycle_graph(5));
    CHECK(cyc.min_degree_two);
    CHECK(!cyc.max_degree_five);
    CHECK(!cyc.has_two_five_edge);
    CHECK(cyc.gap == 0);

    CHECK_THROWS_AS(zagreb::corollary_conditions(
                        zagreb::disjoint_union(zagreb::star_graph(6), zagreb::cycle_graph(3))),
                    zagreb::degree_window_error);
}

TEST_CASE("bridge join index formulas") {
    // joining the first ladder to the complete cubic graph: sizes 20 and 6
    const Graph joined = zagreb::bridge_join(zagreb::xi(1), zagreb::complete_graph(4));
    CHECK(zagreb::bridge_join_first_zagreb(20, 6) == 188);
    CHECK(zagreb::bridge_join_second_zagreb(20, 6) == 285);
    CHECK(zagreb::first_zagreb_index(joined) == 188);
    CHECK(zagreb::second_zagreb_index(joined) == 285);
    CHECK(zagreb::zagreb_gap(joined) == -54);
    CHECK(zagreb::bridge_join_gap(20, 6) == Rational(-54));
}

TEST_CASE("bridge join gap formula and violation condition") {
    CHECK(zagreb::bridge_join_gap(160, 159) == Rational(4));
    CHECK(zagreb::bridge_join_gap(10, 6) == Rational(-29));
    CHECK(zagreb::bridge_join_gap(160, 156) == Rational(-4));
    CHECK(zagreb::bridge_violation_condition(160, 159));
    CHECK(!zagreb::bridge_violation_condition(160, 156));
    CHECK(!zagreb::bridge_violation_condition(10, 9));
}

TEST_CASE("cubic order threshold and its least even escape") {
    CHECK(zagreb::cubic_order_threshold(15) == Rational(105));
    CHECK(zagreb::cubic_order_threshold(8) == Rational(462));
    CHECK(zagreb::least_cubic_order(15) == 106);
    CHECK(zagreb::least_cubic_order(8) == 464);
    CHECK(zagreb::least_cubic_order(16) == 100);
    CHECK_THROWS_AS(zagreb::cubic_order_threshold(7), zagreb::bad_parameter_error);
    CHECK_THROWS_AS(zagreb::least_cubic_order(0), zagreb::bad_parameter_error);

    for (int k = 8; k <= 40; ++k) {
        const auto threshold = zagreb::cubic_order_threshold(k);
        const auto h = zagreb::least_cubic_order(k);
        CHECK(h % 2 == 0);
        CHECK(Rational(h) > threshold);
        CHECK(Rational(h - 2) <= threshold);
    }
}

TEST_CASE("minimal order scan finds the 218-vertex optimum") {
    const auto scan = zagreb::minimal_order_scan(8, 30);
    CHECK(scan.rows.size() == 23);
    CHECK(scan.best_k == 15);
    CHECK(scan.best_total_order == 218);
    CHECK(scan.best_unique);
    for (const auto& row : scan.rows) {
        CHECK(row.ladder_order == 7 * (row.k + 1));
        CHECK(row.total_order == row.ladder_order + row.cubic_order);
        CHECK(row.gap.sign() > 0);  // every scan row is a genuine violation
        CHECK(row.gap ==
              zagreb::bridge_join_gap(10 * (row.k + 1), 3 * row.cubic_order / 2));
    }

    const auto single8 = zagreb::minimal_order_scan(8, 8);
    CHECK(single8.rows.size() == 1);
    CHECK(single8.rows[0].cubic_order == 464);
    CHECK(single8.rows[0].total_order == 527);

    const auto single16 = zagreb::minimal_order_scan(16, 16);
    CHECK(single16.rows[0].cubic_order == 100);
    CHECK(single16.rows[0].total_order == 219);

    CHECK_THROWS_AS(zagreb::minimal_order_scan(7, 10), zagreb::bad_parameter_error);
    CHECK_THROWS_AS(zagreb::minimal_order_scan(10, 9), zagreb::bad_parameter_error);
}

TEST_CASE("the 218-vertex witness checks out end to end") {
    const Graph witness = zagreb::bridge_join(zagreb::xi(15), zagreb::moebius_ladder(106));
    const auto r = zagreb::index_report(witness);
    CHECK(r.n == 218);
    CHECK(r.m == 320);
    CHECK(r.m1 == 2086);
    CHECK(r.m2 == 3062);
    CHECK(r.gap == 4);
    CHECK(witness.is_connected());
    CHECK(zagreb::comparison_verdict(witness) == ComparisonVerdict::violated);
    CHECK(zagreb::bridge_join_gap(160, 159) == Rational(4));
    CHECK(zagreb::corollary_conditions(witness).all_hold());
}
