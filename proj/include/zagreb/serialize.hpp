#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zagreb/certificate.hpp"
#include "zagreb/closed_forms.hpp"
#include "zagreb/conjecture.hpp"
#include "zagreb/edge_list.hpp"
#include "zagreb/graph6.hpp"
#include "zagreb/search.hpp"

namespace zagreb {

using json = nlohmann::json;

/// All numeric payload fields are exact integers; rationals travel as
/// {"num", "den"}.  128-bit intermediates must fit 64 bits to be persisted —
/// if one ever does not, serialization refuses rather than rounds.
inline json rational_json(const Rational& r) {
    return {{"num", to_int64(r.numerator())}, {"den", to_int64(r.denominator())}};
}

inline json index_report_json(const IndexReport& r) {
    return {{"n", r.n},
            {"m", r.m},
            {"m1", to_int64(r.m1)},
            {"m2", to_int64(r.m2)},
            {"gap", to_int64(r.gap)},
            {"slack", rational_json(r.slack)}};
}

inline json families_json(const std::set<DegreePair>& fams) {
    json arr = json::array();
    for (const auto& f : fams) arr.push_back({f.lo, f.hi});
    return arr;
}

inline json verdict_json(const ConjectureVerdict& v) {
    json out{{"status", verdict_name(v.status)},
             {"report", index_report_json(v.report)},
             {"families", families_json(v.families)},
             {"connected", v.connected}};
    if (v.status == ComparisonVerdict::equality)
        out["equality_pattern"] = equality_pattern_name(v.equality_pattern);
    return out;
}

inline json certificate_json(const Certificate& c) {
    return {{"graph6", c.graph6}, {"n", c.n},
            {"m", c.m},           {"m1", to_int64(c.m1)},
            {"m2", to_int64(c.m2)}, {"gap", to_int64(c.gap)},
            {"provenance", c.provenance}};
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    try {
        c.graph6 = j.at("graph6").get<std::string>();
        c.n = j.at("n").get<std::int64_t>();
        c.m = j.at("m").get<std::int64_t>();
        c.m1 = j.at("m1").get<std::int64_t>();
        c.m2 = j.at("m2").get<std::int64_t>();
        c.gap = j.at("gap").get<std::int64_t>();
        c.provenance = j.value("provenance", std::string{});
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad certificate record: ") + e.what());
    }
    return c;
}

inline json table_verification_json(const TableVerification& v) {
    return {{"delta_lo", v.delta_lo},
            {"delta_hi", v.delta_hi},
            {"rows", v.row_count},
            {"comparisons", v.comparisons},
            {"mismatches", v.mismatches},
            {"offsets_complete", v.offsets_complete},
            {"details", v.details}};
}

inline json scan_json(const ScanResult& s) {
    json rows = json::array();
    for (const auto& r : s.rows)
        rows.push_back({{"k", r.k},
                        {"ladder_order", r.ladder_order},
                        {"threshold", rational_json(r.threshold)},
                        {"cubic_order", r.cubic_order},
                        {"total_order", r.total_order},
                        {"gap", rational_json(r.gap)}});
    return {{"rows", rows},
            {"best_k", s.best_k},
            {"best_total_order", s.best_total_order},
            {"best_unique", s.best_unique}};
}

inline json search_config_json(const SearchConfig& cfg) {
    json out{{"degree_lo", cfg.degree_lo},
             {"degree_hi", cfg.degree_hi},
             {"order_lo", cfg.order_lo},
             {"order_hi", cfg.order_hi},
             {"objective", objective_name(cfg.objective)},
             {"require_connected", cfg.require_connected},
             {"swap_budget", cfg.swap_budget},
             {"restarts", cfg.restarts},
             {"seed", cfg.seed},
             {"exhaustive_order_limit", cfg.exhaustive_order_limit},
             {"temperature", cfg.temperature},
             {"cooling", cfg.cooling}};
    if (cfg.forbidden_class)
        out["forbidden_class"] = {cfg.forbidden_class->lo, cfg.forbidden_class->hi};
    return out;
}

// ---------------------------------------------------------------------------
// Files.
// ---------------------------------------------------------------------------

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Write via a temporary then rename, so readers never observe a partial
/// file.
inline void write_text_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw parse_error("cannot open file for writing: " + tmp);
        out << content;
        if (!out) throw parse_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw parse_error("rename failed: " + path);
}

enum class GraphFormat { graph6, edges };

inline GraphFormat parse_format(const std::string& name) {
    if (name == "g6" || name == "graph6") return GraphFormat::graph6;
    if (name == "edges") return GraphFormat::edges;
    throw bad_parameter_error("unknown format '" + name + "' (expected g6 or edges)");
}

/// graph6 input holds one graph per non-blank line; the edge-list format
/// holds a single graph per file.
inline std::vector<Graph> read_graphs(const std::string& text, GraphFormat format) {
    std::vector<Graph> out;
    if (format == GraphFormat::edges) {
        out.push_back(parse_edge_list(text));
        return out;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char ch : line)
            if (ch != ' ' && ch != '\t' && ch != '\r') blank = false;
        if (blank) continue;
        out.push_back(decode_graph6(line));
    }
    if (out.empty()) throw parse_error("no graphs in input");
    return out;
}

} // namespace zagreb
