#include "gs/sampling.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "gs/errors.hpp"
#include "gs/rng.hpp"

namespace gs {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::EdgeRandom: return "ers";
        case Strategy::NodeRandom: return "nrs";
        case Strategy::RandomWalk: return "rw";
    }
    return "ers";
}

Strategy strategy_from_name(const std::string& s) {
    if (s == "ers") return Strategy::EdgeRandom;
    if (s == "nrs") return Strategy::NodeRandom;
    if (s == "rw") return Strategy::RandomWalk;
    throw SpecError("unknown strategy '" + s + "' (expected ers, nrs or rw)");
}

void SampleSpec::validate(const Graph& g) const {
    if (target < 1) throw SpecError("target must be at least 1");
    if (strategy == Strategy::EdgeRandom) {
        if (target > g.edge_count())
            throw SpecError("ERS target " + std::to_string(target) + " exceeds edge count " +
                            std::to_string(g.edge_count()));
    } else {
        if (target > g.node_count())
            throw SpecError(std::string(strategy_name(strategy)) + " target " +
                            std::to_string(target) + " exceeds node count " +
                            std::to_string(g.node_count()));
    }
    if (strategy == Strategy::RandomWalk && (rw_iterations < 1 || rw_runs < 1))
        throw SpecError("rw_iterations and rw_runs must be at least 1");
}

std::string SampleSpec::to_json() const {
    nlohmann::json j{{"strategy", strategy_name(strategy)},
                     {"target", target},
                     {"rw_iterations", rw_iterations},
                     {"rw_runs", rw_runs},
                     {"seed", seed}};
    return j.dump();
}

SampleSpec SampleSpec::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid sample spec JSON: ") + e.what());
    }
    SampleSpec spec;
    try {
        spec.strategy = strategy_from_name(j.at("strategy").get<std::string>());
        spec.target = j.at("target").get<std::uint64_t>();
        spec.rw_iterations = j.value("rw_iterations", spec.rw_iterations);
        spec.rw_runs = j.value("rw_runs", spec.rw_runs);
        spec.seed = j.value("seed", spec.seed);
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("invalid sample spec: ") + e.what());
    }
    return spec;
}

std::uint64_t VisitCounts::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t VisitCounts::visited_nodes() const {
    return static_cast<std::uint64_t>(
        std::count_if(counts.begin(), counts.end(), [](std::uint64_t c) { return c > 0; }));
}

Graph edge_random_sample(const Graph& g, std::uint64_t m, std::uint64_t seed) {
    if (m < 1 || m > g.edge_count())
        throw SpecError("edge sample size " + std::to_string(m) + " out of range [1, " +
                        std::to_string(g.edge_count()) + "]");

    std::vector<std::uint64_t> idx(g.edge_count());
    std::iota(idx.begin(), idx.end(), std::uint64_t{0});
    Rng rng(seed);
    rng.partial_shuffle(idx, m);
    idx.resize(m);
    std::sort(idx.begin(), idx.end());

    const auto all = g.edges();
    std::vector<std::uint8_t> member(g.node_count(), 0);
    std::vector<std::pair<Label, Label>> edges;
    edges.reserve(m);
    for (std::uint64_t i : idx) {
        const auto& [u, v] = all[i];
        member[u] = member[v] = 1;
        edges.emplace_back(g.label(u), g.label(v));
    }

    std::vector<Label> labels;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (member[v]) labels.push_back(g.label(v));

    return Graph(std::move(labels), edges);
}

Graph node_random_sample(const Graph& g, std::uint64_t k, std::uint64_t seed) {
    if (k < 1 || k > g.node_count())
        throw SpecError("node sample size " + std::to_string(k) + " out of range [1, " +
                        std::to_string(g.node_count()) + "]");

    std::vector<NodeId> nodes(g.node_count());
    std::iota(nodes.begin(), nodes.end(), NodeId{0});
    Rng rng(seed);
    rng.partial_shuffle(nodes, k);
    nodes.resize(k);
    return induced_subgraph(g, nodes);
}

VisitCounts random_walk_visit_counts(const Graph& g, std::uint64_t iterations, std::uint64_t runs,
                                     std::uint64_t seed) {
    if (iterations < 1 || runs < 1) throw SpecError("iterations and runs must be at least 1");
    if (g.edge_count() == 0) throw SpecError("walk impossible: graph has no edges");

    std::vector<NodeId> starts;
    starts.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) > 0) starts.push_back(v);

    VisitCounts vc;
    vc.counts.assign(g.node_count(), 0);
    for (std::uint64_t r = 0; r < runs; ++r) {
        Rng rng(derive_seed(seed, r));
        NodeId v = starts[rng.below(starts.size())];
        ++vc.counts[v];
        for (std::uint64_t step = 1; step < iterations; ++step) {
            const auto nb = g.neighbors(v);
            v = nb[rng.below(nb.size())];
            ++vc.counts[v];
        }
    }
    return vc;
}

Graph random_walk_sample(const Graph& g, std::uint64_t x, std::uint64_t iterations,
                         std::uint64_t runs, std::uint64_t seed) {
    if (x < 1 || x > g.node_count())
        throw SpecError("node sample size " + std::to_string(x) + " out of range [1, " +
                        std::to_string(g.node_count()) + "]");
    const VisitCounts vc = random_walk_visit_counts(g, iterations, runs, seed);
    const std::uint64_t visited = vc.visited_nodes();
    if (x > visited)
        throw SpecError("cannot take the " + std::to_string(x) + " most visited nodes: only " +
                        std::to_string(visited) + " nodes were visited");

    std::vector<NodeId> order;
    order.reserve(visited);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (vc.counts[v] > 0) order.push_back(v);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(x), order.end(),
                      [&](NodeId a, NodeId b) {
                          if (vc.counts[a] != vc.counts[b]) return vc.counts[a] > vc.counts[b];
                          return a < b;
                      });
    order.resize(x);
    return induced_subgraph(g, order);
}

Graph draw_sample(const Graph& g, const SampleSpec& spec) {
    spec.validate(g);
    switch (spec.strategy) {
        case Strategy::EdgeRandom: return edge_random_sample(g, spec.target, spec.seed);
        case Strategy::NodeRandom: return node_random_sample(g, spec.target, spec.seed);
        case Strategy::RandomWalk:
            return random_walk_sample(g, spec.target, spec.rw_iterations, spec.rw_runs, spec.seed);
    }
    throw SpecError("unknown strategy");
}

}  // namespace gs
