#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Optional prefix some tools emit in front of each encoded graph.
inline constexpr std::string_view graph6_prefix = ">>graph6<<";

/// Standard graph6 encoding: order header, then the upper triangle of the
/// adjacency matrix read column by column, packed into 6-bit groups offset
/// into the printable range 63..126.
inline std::string encode_graph6(const Graph& g) {
    const std::int64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        // Graph::max_order keeps us far below the 36-bit ceiling
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int nbits = 0;
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

namespace detail {

inline int g6_value(char c, const char* what) {
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw decode_error(std::string("non-printable character in ") + what);
    return v;
}

} // namespace detail

inline Graph decode_graph6(std::string_view s) {
    // tolerate the optional prefix and surrounding whitespace
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    if (s.substr(0, graph6_prefix.size()) == graph6_prefix) s.remove_prefix(graph6_prefix.size());
    if (s.empty()) throw decode_error("empty graph6 string");

    std::size_t pos = 0;
    std::int64_t n = 0;
    if (s[0] != 126) {
        n = detail::g6_value(s[0], "order header");
        pos = 1;
    } else if (s.size() >= 2 && s[1] != 126) {
        if (s.size() < 4) throw decode_error("malformed order header: truncated");
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | detail::g6_value(s[pos], "order header");
    } else {
        if (s.size() < 8) throw decode_error("malformed order header: truncated");
        for (pos = 2; pos <= 7; ++pos) n = (n << 6) | detail::g6_value(s[pos], "order header");
    }
    if (n == 0) throw decode_error("graph6 string encodes an empty vertex set");
    if (n > Graph::max_order) throw order_too_large_error("decoded order exceeds the supported maximum");

    const std::int64_t nbits = n * (n - 1) / 2;
    const std::int64_t nchars = (nbits + 5) / 6;
    const std::int64_t have = static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(pos);
    if (have < nchars) throw decode_error("malformed graph6 string: truncated adjacency data");
    if (have > nchars) throw decode_error("trailing characters after adjacency data");

    std::vector<Edge> edges;
    Vertex i = 0;
    Vertex j = 1;
    for (std::int64_t c = 0; c < nchars; ++c) {
        const int v = detail::g6_value(s[pos + static_cast<std::size_t>(c)], "adjacency data");
        for (int bit = 5; bit >= 0; --bit) {
            const bool set = (v >> bit) & 1;
            if (j >= n) {
                if (set) throw decode_error("nonzero padding bits");
                continue;
            }
            if (set) edges.push_back({i, j});
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return {static_cast<Vertex>(n), edges};
}

} // namespace zagreb
