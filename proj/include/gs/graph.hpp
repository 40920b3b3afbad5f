#ifndef GS_GRAPH_HPP
#define GS_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gs {

using NodeId = std::uint32_t;  // dense internal index, 0..N-1
using Label = std::uint64_t;   // original dataset identifier

struct LoadStats {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    std::uint64_t duplicate_edges_dropped = 0;
    std::uint64_t self_loops_dropped = 0;

    std::string to_json() const;
};

// Immutable undirected simple graph. Nodes carry dense internal ids; the
// label map preserves the original dataset identifiers, so samples written
// back to disk stay in the dataset's vocabulary. Construction deduplicates
// edges and drops self-loops; after that the structure never changes, which
// makes concurrent read-only use safe.
class Graph {
public:
    Graph() = default;

    // `labels` fixes the internal id order (position = internal id) and must
    // be duplicate-free. Edges reference labels; endpoints not present in
    // `labels` are appended in first-seen order.
    Graph(std::vector<Label> labels, const std::vector<std::pair<Label, Label>>& label_edges,
          LoadStats* stats = nullptr);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    // Edges as internal-id pairs with u < v, sorted ascending.
    std::span<const std::pair<NodeId, NodeId>> edges() const { return edges_; }

    Label label(NodeId v) const { return labels_[v]; }
    std::span<const Label> labels() const { return labels_; }
    std::optional<NodeId> internal_id(Label l) const;

    bool has_edge(NodeId u, NodeId v) const;

private:
    std::vector<std::size_t> offsets_;  // n+1 CSR offsets
    std::vector<NodeId> adj_;           // per-node sorted neighbor lists
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<Label> labels_;
    std::unordered_map<Label, NodeId> index_;
};

// Reads a SNAP-style edge list: '#' lines are comments, every other line has
// two whitespace-separated non-negative integer labels. Duplicate edges and
// self-loops are dropped (counted in `stats`). The writer's "# node <label>"
// comment form is recognized so that isolated nodes survive a round trip.
Graph parse_edge_list(std::istream& in, LoadStats* stats = nullptr);
Graph load_edge_list(const std::string& path, LoadStats* stats = nullptr);

// One "u v" line per edge in original labels with u < v, sorted by label
// pair. Isolated nodes are emitted first as "# node <label>" comments.
void write_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::string& path);

// The subgraph on `keep`: exactly those nodes and every edge of `g` with both
// endpoints kept. Kept nodes that lose all edges stay in the node set.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

}  // namespace gs

#endif
