#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Plain-text graph format: a header line "n <order>", then one "u v" pair
/// per line with 0-based vertex indices.  '#' starts a comment; blank lines
/// are ignored.  Errors carry 1-based line numbers.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_order = false;
    long long order = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        const std::string at = " at line " + std::to_string(lineno);
        if (!have_order) {
            std::string tag;
            if (!(fields >> tag)) continue;  // blank line before the header
            if (tag != "n" || !(fields >> order))
                throw parse_error("expected header 'n <order>'" + at);
            std::string extra;
            if (fields >> extra) throw parse_error("unexpected token '" + extra + "'" + at);
            if (order < 1 || order > Graph::max_order)
                throw parse_error("order out of range" + at);
            have_order = true;
            continue;
        }
        long long u = 0;
        long long v = 0;
        if (!(fields >> u)) continue;  // blank line
        if (!(fields >> v)) throw parse_error("expected 'u v' pair" + at);
        std::string extra;
        if (fields >> extra) throw parse_error("unexpected token '" + extra + "'" + at);
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw index_out_of_range_error("vertex index out of range" + at);
        if (u == v) throw self_loop_error("self-loop" + at);
        Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
        if (!seen.insert(e).second) throw duplicate_edge_error("duplicate edge" + at);
        edges.push_back(e);
    }
    if (!have_order) throw parse_error("missing header 'n <order>'");
    return build_graph(static_cast<Vertex>(order), edges);
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace zagreb
