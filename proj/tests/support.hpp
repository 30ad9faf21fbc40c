// Shared helpers for the test suite: naive re-computations that deliberately
// avoid the library's own arithmetic paths, a tiny exhaustive graph
// enumerator, a relabeling helper, and a subprocess runner for the CLI.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "zagreb/graph.hpp"
#include "zagreb/histogram.hpp"
#include "zagreb/rational.hpp"

namespace testsupport {

// Direct summation with plain 64-bit arithmetic; valid for the small graphs
// used in tests.
inline long long naive_m1(const zagreb::Graph& g) {
    long long sum = 0;
    for (zagreb::Vertex v = 0; v < g.order(); ++v) {
        long long d = g.degree(v);
        sum += d * d;
    }
    return sum;
}

inline long long naive_m2(const zagreb::Graph& g) {
    long long sum = 0;
    for (const auto& [u, v] : g.edges()) sum += static_cast<long long>(g.degree(u)) * g.degree(v);
    return sum;
}

inline long long naive_gap(const zagreb::Graph& g) {
    return g.size() * naive_m1(g) - static_cast<long long>(g.order()) * naive_m2(g);
}

// Reduced 64-bit fraction, built without the library's Rational.
struct Frac {
    long long num = 0;
    long long den = 1;
};

inline Frac reduce(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

// ij(1/k + 1/l) + kl(1/i + 1/j) - (i + j + k + l), over the common
// denominator ijkl.  Safe in 64 bits for degrees up to ~1100.
inline Frac naive_class_pair_term(long long i, long long j, long long k, long long l) {
    long long ijkl = i * j * k * l;
    long long num = i * i * j * j * (k + l) + k * k * l * l * (i + j) - (i + j + k + l) * ijkl;
    return reduce(num, ijkl);
}

inline bool frac_matches(const Frac& f, const zagreb::Rational& r) {
    return r == zagreb::Rational(f.num, f.den);
}

// Calls fn with every labeled simple graph on n vertices (2^(n(n-1)/2) of
// them); practical for n <= 6.
template <typename Fn>
inline void for_each_graph(int n, Fn&& fn) {
    std::vector<zagreb::Edge> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    const std::uint64_t total = 1ULL << all.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<zagreb::Edge> edges;
        for (std::size_t b = 0; b < all.size(); ++b)
            if (mask >> b & 1) edges.push_back(all[b]);
        fn(zagreb::Graph(n, edges));
    }
}

inline zagreb::Graph permute_graph(const zagreb::Graph& g, const std::vector<int>& perm) {
    std::vector<zagreb::Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.push_back({perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]});
    return {g.order(), edges};
}

inline zagreb::Graph random_relabeling(const zagreb::Graph& g, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permute_graph(g, perm);
}

inline bool is_star(const zagreb::Graph& g) {
    if (g.order() == 1) return false;
    if (g.size() != g.order() - 1) return false;
    int centers = 0;
    int leaves = 0;
    for (zagreb::Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == g.order() - 1) ++centers;
        if (g.degree(v) == 1) ++leaves;
    }
    if (g.order() == 2) return true;
    return centers == 1 && leaves == g.order() - 1;
}

inline bool is_cycle_graph(const zagreb::Graph& g) {
    if (g.size() != g.order()) return false;
    for (zagreb::Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return g.is_connected();
}

inline std::string temp_path(const std::string& stem) {
    static int counter = 0;
    return "/tmp/zagreb_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
           "_" + stem;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open " + path);
    std::fwrite(content.data(), 1, content.size(), f);
    std::fclose(f);
}

inline std::string slurp(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "r");
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, f)) out.append(buf, got);
    std::fclose(f);
    return out;
}

#ifdef ZAGREB_CLI_PATH
struct CliResult {
    int code = -1;
    std::string output;  // stdout and stderr combined
};

inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(ZAGREB_CLI_PATH) + " " + args + " 2>&1";
    std::FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult result;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
    const int status = ::pclose(pipe);
    result.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}
#endif

} // namespace testsupport
