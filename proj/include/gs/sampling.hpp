#ifndef GS_SAMPLING_HPP
#define GS_SAMPLING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gs/graph.hpp"

namespace gs {

enum class Strategy { EdgeRandom, NodeRandom, RandomWalk };

const char* strategy_name(Strategy s);              // "ers" | "nrs" | "rw"
Strategy strategy_from_name(const std::string& s);  // throws SpecError

// One sampling request. `target` counts edges for ERS and nodes for NRS/RW.
// Identical spec + graph always reproduces the identical sample.
struct SampleSpec {
    Strategy strategy = Strategy::EdgeRandom;
    std::uint64_t target = 1;
    std::uint64_t rw_iterations = 10000;
    std::uint64_t rw_runs = 10;
    std::uint64_t seed = 0;

    void validate(const Graph& g) const;  // throws SpecError
    std::string to_json() const;
    static SampleSpec from_json(const std::string& text);  // throws ParseError/SpecError
};

// Per-node tallies of random-walk visits summed across runs. The total always
// equals runs * iterations: each walk occupies `iterations` positions, start
// included, and every occupied position counts.
struct VisitCounts {
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    std::uint64_t visited_nodes() const;  // nodes with a nonzero tally
};

// Uniform m-subset of the edges, drawn without replacement; the node set is
// exactly the endpoints of the chosen edges.
Graph edge_random_sample(const Graph& g, std::uint64_t m, std::uint64_t seed);

// Uniform k-subset of the nodes without replacement, then the induced
// subgraph; chosen nodes that end up isolated stay in the sample.
Graph node_random_sample(const Graph& g, std::uint64_t k, std::uint64_t seed);

// Each run starts at a uniformly chosen node of degree >= 1 and repeatedly
// moves to a uniformly random neighbor; run r uses the sub-stream
// derive_seed(seed, r), so runs are independent yet individually replayable.
VisitCounts random_walk_visit_counts(const Graph& g, std::uint64_t iterations, std::uint64_t runs,
                                     std::uint64_t seed);

// Induced subgraph on the x most-visited nodes (ties broken by ascending
// internal id). Errors if fewer than x nodes were ever visited.
Graph random_walk_sample(const Graph& g, std::uint64_t x, std::uint64_t iterations,
                         std::uint64_t runs, std::uint64_t seed);

Graph draw_sample(const Graph& g, const SampleSpec& spec);

}  // namespace gs

#endif
