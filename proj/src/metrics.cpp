#include "gs/metrics.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gs/errors.hpp"
#include "gs/parallel.hpp"

namespace gs {

std::string PropertyReport::to_json() const {
    nlohmann::json j{{"avg_degree", avg_degree},
                     {"density", density},
                     {"modularity", modularity},
                     {"avg_clustering", avg_clustering},
                     {"diameter", diameter},
                     {"avg_path_length", avg_path_length},
                     {"connected_components", connected_components},
                     {"largest_component_fraction", largest_component_fraction}};
    return j.dump();
}

PropertyReport PropertyReport::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid property report JSON: ") + e.what());
    }
    PropertyReport r;
    r.avg_degree = j.at("avg_degree").get<double>();
    r.density = j.at("density").get<double>();
    r.modularity = j.at("modularity").get<double>();
    r.avg_clustering = j.at("avg_clustering").get<double>();
    r.diameter = j.at("diameter").get<std::uint32_t>();
    r.avg_path_length = j.at("avg_path_length").get<double>();
    r.connected_components = j.at("connected_components").get<std::uint64_t>();
    r.largest_component_fraction = j.at("largest_component_fraction").get<double>();
    return r;
}

std::uint32_t Partition::community_count() const {
    std::uint32_t max_label = 0;
    for (std::uint32_t c : community) max_label = std::max(max_label, c);
    return community.empty() ? 0 : max_label + 1;
}

std::string Partition::to_csv(const Graph& g) const {
    std::ostringstream os;
    os << "node_label,community_id\n";
    for (NodeId v = 0; v < community.size(); ++v)
        os << g.label(v) << "," << community[v] << "\n";
    return os.str();
}

double average_degree(const Graph& g) {
    if (g.node_count() == 0) throw SpecError("average degree undefined on an empty graph");
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

double density(const Graph& g) {
    const double n = static_cast<double>(g.node_count());
    if (g.node_count() < 2) throw SpecError("density undefined for fewer than 2 nodes");
    return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

Components connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    Components comp;
    comp.label.assign(n, kUnreachable);

    std::vector<NodeId> stack;
    for (NodeId root = 0; root < n; ++root) {
        if (comp.label[root] != kUnreachable) continue;
        const auto c = static_cast<std::uint32_t>(comp.sizes.size());
        comp.sizes.push_back(0);
        comp.label[root] = c;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            ++comp.sizes[c];
            for (NodeId w : g.neighbors(v)) {
                if (comp.label[w] == kUnreachable) {
                    comp.label[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    comp.count = comp.sizes.size();
    return comp;
}

std::uint32_t Components::largest() const {
    std::uint32_t best = 0;
    for (std::uint32_t c = 1; c < sizes.size(); ++c)
        if (sizes[c] > sizes[best]) best = c;
    return best;
}

std::vector<NodeId> Components::largest_members() const {
    const std::uint32_t c = largest();
    std::vector<NodeId> members;
    members.reserve(sizes.empty() ? 0 : sizes[c]);
    for (NodeId v = 0; v < label.size(); ++v)
        if (label[v] == c) members.push_back(v);
    return members;
}

double average_clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw SpecError("clustering undefined on an empty graph");

    // Triangles at each node via sorted-adjacency intersection, one merge
    // scan per edge; each triangle is seen from two of its edges per node.
    std::vector<std::uint64_t> wedge_hits(n, 0);
    for (const auto& [u, v] : g.edges()) {
        const auto nu = g.neighbors(u);
        const auto nv = g.neighbors(v);
        std::size_t i = 0, j = 0, common = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j])
                ++i;
            else if (nu[i] > nv[j])
                ++j;
            else {
                ++common;
                ++i;
                ++j;
            }
        }
        wedge_hits[u] += common;
        wedge_hits[v] += common;
    }

    double sum = 0.0;
    std::size_t eligible = 0;
    for (NodeId v = 0; v < n; ++v) {
        const double d = static_cast<double>(g.degree(v));
        if (d < 2) continue;
        ++eligible;
        const double triangles = static_cast<double>(wedge_hits[v]) / 2.0;
        sum += 2.0 * triangles / (d * (d - 1.0));
    }
    return eligible == 0 ? 0.0 : sum / static_cast<double>(eligible);
}

namespace {

// Frontier-swap BFS filling hop distances; dist must be pre-sized and is
// fully reset on every call.
void bfs(const Graph& g, NodeId source, std::vector<std::uint32_t>& dist,
         std::vector<NodeId>& frontier, std::vector<NodeId>& next) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    dist[source] = 0;
    frontier.clear();
    frontier.push_back(source);
    std::uint32_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (NodeId v : frontier) {
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = level;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
}

}  // namespace

std::vector<std::uint32_t> distances_from(const Graph& g, NodeId source) {
    if (source >= g.node_count())
        throw SpecError("unknown source node id " + std::to_string(source));
    std::vector<std::uint32_t> dist(g.node_count());
    std::vector<NodeId> frontier, next;
    bfs(g, source, dist, frontier, next);
    return dist;
}

DiameterApl diameter_and_apl(const Graph& g, int workers) {
    const Components comp = connected_components(g);
    if (comp.sizes.empty() || comp.sizes[comp.largest()] < 2)
        throw SpecError("diameter undefined: no connected component with at least 2 nodes");
    const std::vector<NodeId> members = comp.largest_members();

    constexpr std::size_t kBlock = 64;
    const std::size_t n_blocks = (members.size() + kBlock - 1) / kBlock;
    std::vector<std::uint64_t> block_sum(n_blocks, 0);
    std::vector<std::uint32_t> block_max(n_blocks, 0);

    parallel_blocks(members.size(), kBlock, workers,
                    [&](std::size_t b, std::size_t begin, std::size_t end) {
                        std::vector<std::uint32_t> dist(g.node_count());
                        std::vector<NodeId> frontier, next;
                        std::uint64_t sum = 0;
                        std::uint32_t maxd = 0;
                        for (std::size_t i = begin; i < end; ++i) {
                            bfs(g, members[i], dist, frontier, next);
                            for (NodeId v : members) {
                                const std::uint32_t d = dist[v];
                                sum += d;
                                maxd = std::max(maxd, d);
                            }
                        }
                        block_sum[b] = sum;
                        block_max[b] = maxd;
                    });

    std::uint64_t total = 0;
    std::uint32_t diameter = 0;
    for (std::size_t b = 0; b < n_blocks; ++b) {
        total += block_sum[b];
        diameter = std::max(diameter, block_max[b]);
    }

    const double pairs =
        static_cast<double>(members.size()) * (static_cast<double>(members.size()) - 1.0);
    return {diameter, static_cast<double>(total) / pairs};
}

double modularity(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0) throw SpecError("modularity undefined: graph has no edges");
    if (p.community.size() != g.node_count())
        throw SpecError("partition labels " + std::to_string(p.community.size()) +
                        " nodes but graph has " + std::to_string(g.node_count()));

    const std::uint32_t n_comm = p.community_count();
    std::vector<std::uint64_t> intra(n_comm, 0);
    std::vector<std::uint64_t> total_degree(n_comm, 0);
    for (const auto& [u, v] : g.edges())
        if (p.community[u] == p.community[v]) ++intra[p.community[u]];
    for (NodeId v = 0; v < g.node_count(); ++v) total_degree[p.community[v]] += g.degree(v);

    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (std::uint32_t c = 0; c < n_comm; ++c) {
        const double frac = static_cast<double>(intra[c]) / m;
        const double expected = static_cast<double>(total_degree[c]) / (2.0 * m);
        q += frac - expected * expected;
    }
    return q;
}

PropertyReport full_report(const Graph& g, std::uint64_t seed, int workers) {
    if (g.node_count() < 2 || g.edge_count() < 1)
        throw SpecError("property report requires at least 2 nodes and 1 edge");

    PropertyReport r;
    r.avg_degree = average_degree(g);
    r.density = density(g);
    r.avg_clustering = average_clustering(g);

    const Components comp = connected_components(g);
    r.connected_components = comp.count;
    r.largest_component_fraction =
        static_cast<double>(comp.sizes[comp.largest()]) / static_cast<double>(g.node_count());

    const DiameterApl da = diameter_and_apl(g, workers);
    r.diameter = da.diameter;
    r.avg_path_length = da.avg_path_length;

    r.modularity = modularity(g, louvain_communities(g, seed));
    return r;
}

}  // namespace gs
