// Shared helpers for the test binaries: small graph builders, deterministic
// random graph generators, and brute-force oracles kept deliberately
// independent of the library's implementation paths.

#ifndef GS_TESTS_SUPPORT_HPP
#define GS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <utility>
#include <vector>

#include "gs/graph.hpp"
#include "gs/rng.hpp"

namespace support {

using gs::Graph;
using gs::Label;
using gs::NodeId;

inline Graph from_pairs(const std::vector<std::pair<Label, Label>>& edges,
                        std::vector<Label> extra_nodes = {}) {
    return Graph(std::move(extra_nodes), edges);
}

inline Graph triangle() { return from_pairs({{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path(std::size_t n) {
    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_pairs(edges);
}

inline Graph star(std::size_t leaves) {
    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return from_pairs(edges);
}

inline Graph complete(std::size_t n) {
    std::vector<std::pair<Label, Label>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_pairs(edges);
}

inline Graph two_triangles() {
    return from_pairs({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// Uniform simple G(n, m) with labels 0..n-1 (isolated nodes possible).
inline Graph gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    gs::Rng rng(seed);
    std::set<std::pair<Label, Label>> chosen;
    while (chosen.size() < m) {
        const Label u = rng.below(n);
        const Label v = rng.below(n);
        if (u == v) continue;
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Label> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = i;
    return Graph(std::move(nodes),
                 std::vector<std::pair<Label, Label>>(chosen.begin(), chosen.end()));
}

// Connected variant: a random spanning tree plus extra random edges.
inline Graph connected_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
    gs::Rng rng(seed);
    std::set<std::pair<Label, Label>> chosen;
    for (std::size_t v = 1; v < n; ++v) {
        const Label u = rng.below(v);
        chosen.insert({u, v});
    }
    while (chosen.size() < m) {
        const Label u = rng.below(n);
        const Label v = rng.below(n);
        if (u == v) continue;
        chosen.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Label> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = i;
    return Graph(std::move(nodes),
                 std::vector<std::pair<Label, Label>>(chosen.begin(), chosen.end()));
}

inline std::set<std::pair<Label, Label>> label_edge_set(const Graph& g) {
    std::set<std::pair<Label, Label>> out;
    for (const auto& [u, v] : g.edges()) {
        Label a = g.label(u), b = g.label(v);
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

inline std::set<Label> label_set(const Graph& g) {
    std::set<Label> out;
    for (NodeId v = 0; v < g.node_count(); ++v) out.insert(g.label(v));
    return out;
}

inline bool same_graph(const Graph& a, const Graph& b) {
    return label_set(a) == label_set(b) && label_edge_set(a) == label_edge_set(b);
}

inline std::vector<std::size_t> sorted_degrees(const Graph& g) {
    std::vector<std::size_t> d;
    for (NodeId v = 0; v < g.node_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

// --- oracles ---------------------------------------------------------------

inline constexpr int kFwInf = 1 << 29;

// All-pairs shortest hop counts by the classic triple loop.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kFwInf));
    for (std::size_t v = 0; v < n; ++v) dist[v][v] = 0;
    for (const auto& [u, v] : g.edges()) dist[u][v] = dist[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
    return dist;
}

// Betweenness by direct path counting over every (s, t) pair: a node v lies
// on a shortest s-t path iff d(s,v) + d(v,t) = d(s,t), and the number of such
// paths through v is sigma(s,v) * sigma(v,t).
inline std::vector<double> naive_betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<int>> dist(n);
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    const auto fw = floyd_warshall(g);
    for (std::size_t s = 0; s < n; ++s) {
        dist[s].assign(fw[s].begin(), fw[s].end());
        // Path counts in increasing distance order.
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return dist[s][a] < dist[s][b]; });
        sigma[s][s] = 1.0;
        for (std::size_t idx : order) {
            if (idx == s || dist[s][idx] >= kFwInf) continue;
            for (NodeId w : g.neighbors(static_cast<NodeId>(idx)))
                if (dist[s][w] + 1 == dist[s][idx]) sigma[s][idx] += sigma[s][w];
        }
    }

    std::vector<double> bc(n, 0.0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t) {
            if (fw[s][t] >= kFwInf) continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                if (fw[s][v] + fw[v][t] == fw[s][t])
                    bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
        }
    return bc;
}

// The pair-enumeration construction of an induced edge set: every unordered
// pair of kept nodes is checked against the parent's edge set.
inline std::set<std::pair<Label, Label>> pairwise_induced_edges(const Graph& g,
                                                                const std::vector<NodeId>& keep) {
    const auto parent_edges = label_edge_set(g);
    std::set<std::pair<Label, Label>> out;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (i == j) continue;
            Label a = g.label(keep[i]), b = g.label(keep[j]);
            if (a > b) std::swap(a, b);
            if (parent_edges.count({a, b})) out.insert({a, b});
        }
    return out;
}

// Enumerates every partition of {0..n-1} (restricted growth strings).
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    std::vector<std::uint32_t> assign(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i,
                                                              std::uint32_t blocks) {
        if (i == n) {
            fn(assign);
            return;
        }
        for (std::uint32_t b = 0; b <= blocks; ++b) {
            assign[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
}

// --- process helpers ---------------------------------------------------------

inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path() /
                     ("gs_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the CLI binary named by $GRAPHSAMPLE_CLI with stdout/stderr captured.
inline CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("GRAPHSAMPLE_CLI");
    if (!bin) return {};
    const auto dir = fresh_temp_dir("cli_io");
    const auto out_path = dir / "out.txt";
    const auto err_path = dir / "err.txt";
    const std::string cmd = std::string("\"") + bin + "\" " + args + " > \"" +
                            out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    const int rc = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = (rc == -1) ? -1 : WEXITSTATUS(rc);
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    return result;
}

}  // namespace support

#endif
