// Command-line front end: exact Zagreb-index reports, conjecture checks,
// family constructors, closed-form verification, the minimal-order scan,
// counterexample search, and certificate verification.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zagreb/certificate.hpp"
#include "zagreb/closed_forms.hpp"
#include "zagreb/conjecture.hpp"
#include "zagreb/families.hpp"
#include "zagreb/search.hpp"
#include "zagreb/serialize.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;

int cmd_compute(const std::string& input, const std::string& format) {
    const auto graphs = zagreb::read_graphs(zagreb::read_text_file(input), zagreb::parse_format(format));
    for (const auto& g : graphs) {
        zagreb::json j = zagreb::index_report_json(zagreb::index_report(g));
        j["graph6"] = zagreb::encode_graph6(g);
        std::cout << j.dump() << "\n";
    }
    return exit_ok;
}

int cmd_check(const std::string& input, const std::string& format) {
    const auto graphs = zagreb::read_graphs(zagreb::read_text_file(input), zagreb::parse_format(format));
    for (const auto& g : graphs) {
        zagreb::json j = zagreb::verdict_json(zagreb::classify_conjecture(g));
        j["graph6"] = zagreb::encode_graph6(g);
        std::cout << j.dump() << "\n";
    }
    return exit_ok;
}

zagreb::CubicKind parse_cubic_kind(const std::string& name) {
    if (name == "complete4") return zagreb::CubicKind::complete4;
    if (name == "prism") return zagreb::CubicKind::prism;
    if (name == "moebius") return zagreb::CubicKind::moebius_ladder;
    if (name == "circulant") return zagreb::CubicKind::circulant;
    if (name == "random") return zagreb::CubicKind::random_pairing;
    throw zagreb::bad_parameter_error(
        "unknown cubic kind '" + name + "' (expected complete4, prism, moebius, circulant, random)");
}

int parse_int_arg(const std::vector<std::string>& params, std::size_t idx, const char* what) {
    if (idx >= params.size())
        throw zagreb::bad_parameter_error(std::string("missing parameter: ") + what);
    try {
        std::size_t used = 0;
        const int value = std::stoi(params[idx], &used);
        if (used != params[idx].size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw zagreb::bad_parameter_error("parameter '" + params[idx] + "' is not an integer (" +
                                          what + ")");
    }
}

void expect_params(const std::vector<std::string>& params, std::size_t count, const char* usage) {
    if (params.size() != count)
        throw zagreb::bad_parameter_error(std::string("expected: family ") + usage);
}

int cmd_family(const std::string& kind, const std::vector<std::string>& params, std::uint64_t seed,
               const std::string& out_path) {
    zagreb::Graph g{1, {}};
    if (kind == "xi") {
        expect_params(params, 1, "xi <k>");
        g = zagreb::xi(parse_int_arg(params, 0, "k"));
    } else if (kind == "path") {
        expect_params(params, 1, "path <order>");
        g = zagreb::path_graph(parse_int_arg(params, 0, "order"));
    } else if (kind == "star") {
        expect_params(params, 1, "star <order>");
        g = zagreb::star_graph(parse_int_arg(params, 0, "order"));
    } else if (kind == "cycle") {
        expect_params(params, 1, "cycle <order>");
        g = zagreb::cycle_graph(parse_int_arg(params, 0, "order"));
    } else if (kind == "complete") {
        expect_params(params, 1, "complete <order>");
        g = zagreb::complete_graph(parse_int_arg(params, 0, "order"));
    } else if (kind == "kbipartite") {
        expect_params(params, 2, "kbipartite <a> <b>");
        g = zagreb::complete_bipartite(parse_int_arg(params, 0, "a"), parse_int_arg(params, 1, "b"));
    } else if (kind == "cubic") {
        expect_params(params, 2, "cubic <kind> <order>");
        g = zagreb::cubic_graph(parse_cubic_kind(params[0]), parse_int_arg(params, 1, "order"), seed);
    } else if (kind == "bridge-join") {
        expect_params(params, 3, "bridge-join <k> <cubic-kind> <order>");
        g = zagreb::bridge_join(zagreb::xi(parse_int_arg(params, 0, "k")),
                                zagreb::cubic_graph(parse_cubic_kind(params[1]),
                                                    parse_int_arg(params, 2, "order"), seed));
    } else if (kind == "disjoint") {
        expect_params(params, 2, "disjoint <r> <l>");
        g = zagreb::disjoint_counterexample(parse_int_arg(params, 0, "r"), parse_int_arg(params, 1, "l"));
    } else {
        throw zagreb::bad_parameter_error(
            "unknown family '" + kind +
            "' (expected xi, path, star, cycle, complete, kbipartite, cubic, bridge-join, disjoint)");
    }
    const std::string encoded = zagreb::encode_graph6(g) + "\n";
    if (!out_path.empty())
        zagreb::write_text_file_atomic(out_path, encoded);
    else
        std::cout << encoded;
    return exit_ok;
}

int cmd_verify_table(int delta_max, const std::string& out_path) {
    const zagreb::TableVerification v = zagreb::verify_closed_form_table(1, delta_max);
    std::set<std::string> bad_rows;
    for (const auto& d : v.details) bad_rows.insert(d.substr(0, d.find(" at d=")));
    std::cout << (v.row_count - static_cast<int>(bad_rows.size())) << "/" << v.row_count
              << " rows verified, " << v.mismatches << " mismatches\n";
    std::cout << "delta range 1.." << delta_max << ", " << v.comparisons << " comparisons, offsets "
              << (v.offsets_complete ? "complete" : "INCOMPLETE") << "\n";
    for (const auto& d : v.details) std::cout << "mismatch: " << d << "\n";
    if (!out_path.empty())
        zagreb::write_text_file_atomic(out_path, zagreb::table_verification_json(v).dump(2) + "\n");
    return v.ok() ? exit_ok : exit_verification_failure;
}

int cmd_scan(int k_min, int k_max, const std::string& out_path) {
    const zagreb::ScanResult s = zagreb::minimal_order_scan(k_min, k_max);
    std::cout << "k  ladder_n  threshold  cubic_n  total_n  gap\n";
    for (const auto& r : s.rows)
        std::cout << r.k << "  " << r.ladder_order << "  " << r.threshold.str() << "  "
                  << r.cubic_order << "  " << r.total_order << "  " << r.gap.str() << "\n";
    const auto* best = &s.rows.front();
    for (const auto& r : s.rows)
        if (r.k == s.best_k) best = &r;
    std::cout << "minimum order " << s.best_total_order << " at k=" << s.best_k << " (cubic order "
              << best->cubic_order << (s.best_unique ? ", unique" : ", tied") << ")\n";
    if (!out_path.empty())
        zagreb::write_text_file_atomic(out_path, zagreb::scan_json(s).dump(2) + "\n");
    return exit_ok;
}

int cmd_search(const zagreb::SearchConfig& cfg, const std::string& out_path) {
    const auto t0 = std::chrono::steady_clock::now();
    const zagreb::SearchRun run = zagreb::run_search(cfg);
    const auto t1 = std::chrono::steady_clock::now();

    zagreb::json summary{{"config", zagreb::search_config_json(run.config)},
                         {"distinct_found", run.distinct_found},
                         {"note", run.note}};
    if (run.smallest_violation_order)
        summary["smallest_violation_order"] = *run.smallest_violation_order;
    zagreb::json certs = zagreb::json::array();
    for (const auto& c : run.certificates) certs.push_back(zagreb::certificate_json(c));
    summary["certificates"] = certs;
    std::cout << summary.dump(2) << "\n";

    if (!out_path.empty()) {
        std::string lines;
        for (const auto& c : run.certificates) lines += zagreb::certificate_json(c).dump() + "\n";
        zagreb::write_text_file_atomic(out_path, lines);
        zagreb::json manifest{{"config", zagreb::search_config_json(run.config)},
                              {"certificates", run.certificates.size()},
                              {"note", run.note},
                              {"wall_time_ms", std::chrono::duration_cast<std::chrono::milliseconds>(
                                                   t1 - t0)
                                                   .count()}};
        zagreb::write_text_file_atomic(out_path + ".manifest.json", manifest.dump(2) + "\n");
    }
    return exit_ok;
}

int cmd_certify(const std::string& input) {
    std::istringstream in(zagreb::read_text_file(input));
    std::string line;
    int lineno = 0;
    long long rejected = 0;
    long long total = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool blank = true;
        for (char ch : line)
            if (ch != ' ' && ch != '\t' && ch != '\r') blank = false;
        if (blank) continue;
        ++total;
        zagreb::json result{{"line", lineno}};
        try {
            const zagreb::Certificate cert =
                zagreb::certificate_from_json(zagreb::json::parse(line));
            const zagreb::CertificateCheck check = zagreb::verify_certificate(cert);
            result["status"] = zagreb::certificate_status_name(check.status);
            result["reason"] = check.reason;
            result["graph6"] = cert.graph6;
            if (!check.accepted()) ++rejected;
        } catch (const std::exception& e) {
            result["status"] = "parse-failure";
            result["reason"] = e.what();
            ++rejected;
        }
        std::cout << result.dump() << "\n";
    }
    std::cout << zagreb::json{{"total", total}, {"rejected", rejected}}.dump() << "\n";
    return rejected == 0 ? exit_ok : exit_verification_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact first/second Zagreb index toolkit"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "g6";
    std::string out_path;
    std::uint64_t seed = 0;

    auto* compute = app.add_subcommand("compute", "exact index report per input graph");
    compute->add_option("--input", input, "input file")->required();
    compute->add_option("--format", format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

    auto* check = app.add_subcommand("check", "classify each input graph against M1/n <= M2/m");
    check->add_option("--input", input, "input file")->required();
    check->add_option("--format", format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

    std::string family_kind;
    std::vector<std::string> family_params;
    auto* family = app.add_subcommand("family", "construct a named graph family, emit graph6");
    family->add_option("kind", family_kind,
                       "xi | path | star | cycle | complete | kbipartite | cubic | bridge-join | disjoint")
        ->required();
    family->add_option("params", family_params, "family parameters");
    family->add_option("--seed", seed, "seed for randomized constructions");
    family->add_option("--out", out_path, "write the encoding here instead of stdout");

    int delta_max = 1000;
    auto* verify_table = app.add_subcommand("verify-table", "re-derive every interaction closed form");
    verify_table->add_option("--delta-max", delta_max, "check minimum degrees 1..delta-max")
        ->check(CLI::PositiveNumber);
    verify_table->add_option("--out", out_path, "also write a JSON report here");

    int k_min = 8;
    int k_max = 30;
    auto* scan = app.add_subcommand("scan-prop2", "minimal-order scan for the bridge-join family");
    scan->add_option("--k-min", k_min, "smallest ladder parameter (>= 8)");
    scan->add_option("--k-max", k_max, "largest ladder parameter");
    scan->add_option("--out", out_path, "also write a JSON report here");

    zagreb::SearchConfig cfg;
    std::vector<int> window;
    std::vector<int> forbid;
    std::int64_t fixed_order = 0;
    std::string objective = "min-order";
    auto* search = app.add_subcommand("search", "hunt for verified counterexamples");
    search->add_option("--window", window, "degree window: lo hi")->expected(2);
    search->add_option("--order", fixed_order, "search at this exact order");
    search->add_option("--order-min", cfg.order_lo, "smallest order to try");
    search->add_option("--order-max", cfg.order_hi, "largest order to try");
    search->add_option("--objective", objective, "min-order | max-gap | count")
        ->check(CLI::IsMember({"min-order", "max-gap", "count"}));
    search->add_option("--seed", cfg.seed, "random seed");
    search->add_option("--budget", cfg.swap_budget, "total swap/step budget");
    search->add_option("--restarts", cfg.restarts, "independent restarts");
    search->add_flag("--connected", cfg.require_connected, "only count connected graphs");
    search->add_option("--forbid-class", forbid, "forbid one edge class: i j")->expected(2);
    search->add_option("--out", out_path, "write certificates (JSON lines) and a manifest");

    auto* certify = app.add_subcommand("certify", "re-verify certificates (JSON lines)");
    certify->add_option("--input", input, "certificate file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (compute->parsed()) return cmd_compute(input, format);
        if (check->parsed()) return cmd_check(input, format);
        if (family->parsed()) return cmd_family(family_kind, family_params, seed, out_path);
        if (verify_table->parsed()) return cmd_verify_table(delta_max, out_path);
        if (scan->parsed()) return cmd_scan(k_min, k_max, out_path);
        if (search->parsed()) {
            if (!window.empty()) {
                cfg.degree_lo = window[0];
                cfg.degree_hi = window[1];
            }
            if (fixed_order > 0) {
                cfg.order_lo = fixed_order;
                cfg.order_hi = fixed_order;
                if (objective == "min-order") objective = "count";
            }
            if (objective == "min-order") cfg.objective = zagreb::SearchObjective::minimize_order;
            if (objective == "max-gap") cfg.objective = zagreb::SearchObjective::maximize_gap_at_order;
            if (objective == "count") cfg.objective = zagreb::SearchObjective::count_at_order;
            if (!forbid.empty()) cfg.forbidden_class = zagreb::make_class(forbid[0], forbid[1]);
            return cmd_search(cfg, out_path);
        }
        if (certify->parsed()) return cmd_certify(input);
    } catch (const zagreb::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
