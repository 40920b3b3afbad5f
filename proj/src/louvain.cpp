#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gs/errors.hpp"
#include "gs/metrics.hpp"
#include "gs/rng.hpp"

namespace gs {

namespace {

constexpr double kMinGain = 1e-7;

// Aggregated graph between Louvain levels. Edge weights count each undirected
// edge once; a node's weighted degree counts its self-loop twice.
struct LevelGraph {
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> adj;
    std::vector<double> weight;     // parallel to adj
    std::vector<double> self_loop;  // per node
    std::vector<double> degree;     // weighted degree incl. 2 * self_loop
    double total_weight = 0.0;      // sum of edge weights + self loops

    std::size_t size() const { return self_loop.size(); }
};

LevelGraph level_from_graph(const Graph& g) {
    LevelGraph lg;
    const std::size_t n = g.node_count();
    lg.offsets.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) lg.offsets[v + 1] = lg.offsets[v] + g.degree(static_cast<NodeId>(v));
    lg.adj.reserve(lg.offsets[n]);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId w : g.neighbors(v)) lg.adj.push_back(w);
    lg.weight.assign(lg.adj.size(), 1.0);
    lg.self_loop.assign(n, 0.0);
    lg.degree.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        lg.degree[v] = static_cast<double>(g.degree(static_cast<NodeId>(v)));
    lg.total_weight = static_cast<double>(g.edge_count());
    return lg;
}

// One pass of local moves until no move improves modularity by more than
// kMinGain. Returns the number of moves applied.
std::size_t local_moves(const LevelGraph& lg, std::vector<std::uint32_t>& community, Rng& rng) {
    const std::size_t n = lg.size();
    const double two_m = 2.0 * lg.total_weight;
    const double inv_m = 1.0 / lg.total_weight;  // puts gains in modularity units

    std::vector<double> community_degree(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) community_degree[community[v]] += lg.degree[v];

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);

    // Scratch map from community id to accumulated link weight; `touched`
    // lists the dirty entries so clearing is O(neighbors).
    std::vector<double> link_weight(n, 0.0);
    std::vector<std::uint32_t> touched;

    std::size_t total_moves = 0;
    for (;;) {
        rng.shuffle(order);
        std::size_t moves = 0;
        for (std::uint32_t v : order) {
            const std::uint32_t old_c = community[v];

            touched.clear();
            for (std::size_t e = lg.offsets[v]; e < lg.offsets[v + 1]; ++e) {
                const std::uint32_t c = community[lg.adj[e]];
                if (link_weight[c] == 0.0) touched.push_back(c);
                link_weight[c] += lg.weight[e];
            }
            if (link_weight[old_c] == 0.0) touched.push_back(old_c);
            std::sort(touched.begin(), touched.end());

            community_degree[old_c] -= lg.degree[v];

            // Gain of joining community c, relative to standing alone:
            // link(v,c) - degree(c) * degree(v) / 2m. Candidates are scanned
            // in ascending community id, so ties resolve deterministically.
            double best_gain =
                (link_weight[old_c] - community_degree[old_c] * lg.degree[v] / two_m) * inv_m;
            std::uint32_t best_c = old_c;
            for (std::uint32_t c : touched) {
                if (c == old_c) continue;
                const double gain =
                    (link_weight[c] - community_degree[c] * lg.degree[v] / two_m) * inv_m;
                if (gain > best_gain + kMinGain) {
                    best_gain = gain;
                    best_c = c;
                }
            }

            community_degree[best_c] += lg.degree[v];
            if (best_c != old_c) {
                community[v] = best_c;
                ++moves;
            }

            for (std::uint32_t c : touched) link_weight[c] = 0.0;
        }
        total_moves += moves;
        if (moves == 0) break;
    }
    return total_moves;
}

// Renumbers communities densely by smallest member and builds the aggregate
// graph whose nodes are the communities.
LevelGraph aggregate(const LevelGraph& lg, std::vector<std::uint32_t>& community) {
    const std::size_t n = lg.size();
    std::vector<std::uint32_t> remap(n, 0xFFFFFFFFu);
    std::uint32_t next_id = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (remap[community[v]] == 0xFFFFFFFFu) remap[community[v]] = next_id++;
    for (std::size_t v = 0; v < n; ++v) community[v] = remap[community[v]];

    const std::size_t nc = next_id;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> buckets(nc);
    LevelGraph out;
    out.self_loop.assign(nc, 0.0);

    for (std::size_t v = 0; v < n; ++v) {
        const std::uint32_t cv = community[v];
        out.self_loop[cv] += lg.self_loop[v];
        for (std::size_t e = lg.offsets[v]; e < lg.offsets[v + 1]; ++e) {
            const std::uint32_t cw = community[lg.adj[e]];
            if (cv == cw)
                out.self_loop[cv] += lg.weight[e] / 2.0;  // each intra edge seen twice
            else
                buckets[cv].emplace_back(cw, lg.weight[e]);
        }
    }

    out.offsets.assign(nc + 1, 0);
    out.degree.assign(nc, 0.0);
    for (std::size_t c = 0; c < nc; ++c) {
        auto& b = buckets[c];
        std::sort(b.begin(), b.end(),
                  [](const auto& a, const auto& z) { return a.first < z.first; });
        std::size_t merged = 0;
        for (std::size_t i = 0; i < b.size();) {
            double w = 0.0;
            std::size_t j = i;
            while (j < b.size() && b[j].first == b[i].first) w += b[j++].second;
            b[merged++] = {b[i].first, w};
            i = j;
        }
        b.resize(merged);
        out.offsets[c + 1] = out.offsets[c] + merged;
    }
    out.adj.reserve(out.offsets[nc]);
    out.weight.reserve(out.offsets[nc]);
    out.total_weight = 0.0;
    for (std::size_t c = 0; c < nc; ++c) {
        double deg = 2.0 * out.self_loop[c];
        out.total_weight += out.self_loop[c];
        for (const auto& [w_node, w] : buckets[c]) {
            out.adj.push_back(w_node);
            out.weight.push_back(w);
            deg += w;
            if (c < w_node) out.total_weight += w;
        }
        out.degree[c] = deg;
    }
    return out;
}

}  // namespace

Partition louvain_communities(const Graph& g, std::uint64_t seed) {
    if (g.edge_count() == 0) throw SpecError("modularity undefined: graph has no edges");

    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> node_community(n);
    std::iota(node_community.begin(), node_community.end(), 0u);

    Rng rng(derive_seed(seed, 0x10a1));
    LevelGraph level = level_from_graph(g);
    std::vector<std::uint32_t> level_community(level.size());
    std::iota(level_community.begin(), level_community.end(), 0u);

    for (;;) {
        const std::size_t moves = local_moves(level, level_community, rng);
        const std::size_t before = level.size();
        level = aggregate(level, level_community);
        for (std::size_t v = 0; v < n; ++v) node_community[v] = level_community[node_community[v]];
        if (moves == 0 || level.size() == before) break;
        level_community.assign(level.size(), 0);
        std::iota(level_community.begin(), level_community.end(), 0u);
    }

    // Dense labels in order of first occurrence, so equal partitions compare
    // equal regardless of the merge history.
    std::vector<std::uint32_t> remap(n, 0xFFFFFFFFu);
    std::uint32_t next_id = 0;
    Partition p;
    p.community.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (remap[node_community[v]] == 0xFFFFFFFFu) remap[node_community[v]] = next_id++;
        p.community[v] = remap[node_community[v]];
    }
    return p;
}

}  // namespace gs
