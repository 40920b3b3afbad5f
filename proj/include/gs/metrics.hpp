#ifndef GS_METRICS_HPP
#define GS_METRICS_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gs/graph.hpp"

namespace gs {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// The property set reported for every graph and sample. Diameter and average
// path length are measured on the largest connected component;
// largest_component_fraction says how much of the graph that component is.
struct PropertyReport {
    double avg_degree = 0.0;
    double density = 0.0;
    double modularity = 0.0;
    double avg_clustering = 0.0;
    std::uint32_t diameter = 0;
    double avg_path_length = 0.0;
    std::uint64_t connected_components = 0;
    double largest_component_fraction = 0.0;

    std::string to_json() const;
    static PropertyReport from_json(const std::string& text);
};

struct Partition {
    std::vector<std::uint32_t> community;  // dense labels, one per node

    std::uint32_t community_count() const;
    std::string to_csv(const Graph& g) const;  // header "node_label,community_id"
};

struct Components {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> label;  // dense, in order of discovery by node id
    std::vector<std::uint64_t> sizes;

    std::uint32_t largest() const;  // ties broken by smallest component label
    std::vector<NodeId> largest_members() const;
};

// 2|E|/|N|: every undirected edge contributes to two endpoint degrees.
double average_degree(const Graph& g);

// 2|E|/(|N|(|N|-1)), the filled fraction of possible undirected edges.
double density(const Graph& g);

Components connected_components(const Graph& g);

// Mean local clustering coefficient over the nodes with degree >= 2; nodes
// with fewer than two neighbors have no neighbor pairs and are left out of
// the denominator (the convention of common network tools).
double average_clustering(const Graph& g);

// Exact BFS hop distances; unreached nodes get kUnreachable.
std::vector<std::uint32_t> distances_from(const Graph& g, NodeId source);

struct DiameterApl {
    std::uint32_t diameter = 0;
    double avg_path_length = 0.0;
};

// All-pairs BFS over the largest connected component. The distance total is
// accumulated in integers, so any worker count gives identical results.
DiameterApl diameter_and_apl(const Graph& g, int workers = 1);

// Greedy multi-level modularity maximization; node visiting order is shuffled
// by `seed`, moves stop once no move gains more than 1e-7.
Partition louvain_communities(const Graph& g, std::uint64_t seed);

// Q = sum_c [ e_c/|E| - (d_c/(2|E|))^2 ].
double modularity(const Graph& g, const Partition& p);

// Exact unnormalized shortest-path betweenness (Brandes), each unordered pair
// counted once. Per-source contributions are folded in fixed block order so
// results are identical at any worker count.
std::vector<double> betweenness_centrality(const Graph& g, int workers = 1);

PropertyReport full_report(const Graph& g, std::uint64_t seed, int workers = 1);

}  // namespace gs

#endif
