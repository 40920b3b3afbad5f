#include "gs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gs/errors.hpp"

namespace gs {

std::string LoadStats::to_json() const {
    std::ostringstream os;
    os << "{\"nodes\":" << nodes << ",\"edges\":" << edges
       << ",\"duplicate_edges_dropped\":" << duplicate_edges_dropped
       << ",\"self_loops_dropped\":" << self_loops_dropped << "}";
    return os.str();
}

Graph::Graph(std::vector<Label> labels, const std::vector<std::pair<Label, Label>>& label_edges,
             LoadStats* stats) {
    labels_ = std::move(labels);
    index_.reserve(labels_.size() + 16);
    for (NodeId v = 0; v < labels_.size(); ++v) {
        if (!index_.emplace(labels_[v], v).second)
            throw SpecError("duplicate node label " + std::to_string(labels_[v]));
    }

    std::uint64_t self_loops = 0;
    edges_.reserve(label_edges.size());
    for (const auto& [la, lb] : label_edges) {
        for (Label l : {la, lb}) {
            if (!index_.contains(l)) {
                index_.emplace(l, static_cast<NodeId>(labels_.size()));
                labels_.push_back(l);
            }
        }
        if (la == lb) {
            ++self_loops;
            continue;
        }
        NodeId u = index_.at(la);
        NodeId v = index_.at(lb);
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }

    std::sort(edges_.begin(), edges_.end());
    const std::size_t raw = edges_.size();
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    if (stats) {
        stats->nodes = labels_.size();
        stats->edges = edges_.size();
        stats->duplicate_edges_dropped = raw - edges_.size();
        stats->self_loops_dropped = self_loops;
    }

    const std::size_t n = labels_.size();
    offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];

    adj_.resize(edges_.size() * 2);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted, so a single pass fills every adjacency list in
    // ascending order without a per-node sort.
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
}

std::optional<NodeId> Graph::internal_id(Label l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool parse_label(std::string_view token, Label& out) {
    if (token.empty()) return false;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in, LoadStats* stats) {
    std::vector<Label> isolated;
    std::vector<std::pair<Label, Label>> edges;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens[0][0] == '#') {
            // "# node <label>" registers a node that has no edge lines.
            if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "node") {
                Label l;
                if (parse_label(tokens[2], l)) isolated.push_back(l);
            }
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError("expected two integer labels, got " + std::to_string(tokens.size()) +
                                 " token(s)",
                             line_no);
        Label a, b;
        if (!parse_label(tokens[0], a) || !parse_label(tokens[1], b))
            throw ParseError("expected two non-negative integer labels", line_no);
        edges.emplace_back(a, b);
    }

    if (edges.empty() && isolated.empty()) throw ParseError("no edges");
    return Graph(std::move(isolated), edges, stats);
}

Graph load_edge_list(const std::string& path, LoadStats* stats) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_edge_list(in, stats);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    std::vector<Label> isolated;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 0) isolated.push_back(g.label(v));
    std::sort(isolated.begin(), isolated.end());
    for (Label l : isolated) out << "# node " << l << "\n";

    std::vector<std::pair<Label, Label>> rows;
    rows.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        Label a = g.label(u);
        Label b = g.label(v);
        if (a > b) std::swap(a, b);
        rows.emplace_back(a, b);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [a, b] : rows) out << a << " " << b << "\n";
    if (!out) throw IoError("edge list write failed");
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_edge_list(g, out);
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
    const std::size_t n = g.node_count();
    std::vector<NodeId> nodes(keep.begin(), keep.end());
    for (NodeId v : nodes)
        if (v >= n) throw SpecError("induced_subgraph: unknown node id " + std::to_string(v));
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    std::vector<std::uint8_t> member(n, 0);
    for (NodeId v : nodes) member[v] = 1;

    std::vector<Label> labels;
    labels.reserve(nodes.size());
    for (NodeId v : nodes) labels.push_back(g.label(v));

    std::vector<std::pair<Label, Label>> edges;
    for (NodeId u : nodes)
        for (NodeId v : g.neighbors(u))
            if (u < v && member[v]) edges.emplace_back(g.label(u), g.label(v));

    return Graph(std::move(labels), edges);
}

}  // namespace gs
