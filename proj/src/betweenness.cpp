#include <algorithm>
#include <cstdint>
#include <vector>

#include "gs/metrics.hpp"
#include "gs/parallel.hpp"

namespace gs {

namespace {

// One Brandes source pass: BFS computing distances and shortest-path counts,
// then dependency accumulation walking nodes in reverse BFS order.
// Predecessors are recovered from the distance array instead of stored lists.
void accumulate_source(const Graph& g, NodeId s, std::vector<std::uint32_t>& dist,
                       std::vector<double>& sigma, std::vector<double>& delta,
                       std::vector<NodeId>& order, std::vector<double>& bc) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::fill(sigma.begin(), sigma.end(), 0.0);

    dist[s] = 0;
    sigma[s] = 1.0;
    order.clear();
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const NodeId v = order[head];
        for (NodeId w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                order.push_back(w);
            }
            if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
        }
    }

    for (NodeId v : order) delta[v] = 0.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId w = *it;
        for (NodeId v : g.neighbors(w))
            if (dist[v] + 1 == dist[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        if (w != s) bc[w] += delta[w];
    }
}

}  // namespace

std::vector<double> betweenness_centrality(const Graph& g, int workers) {
    const std::size_t n = g.node_count();
    if (n == 0) return {};

    // Fixed-size source blocks; per-block partial scores are folded in block
    // order, so the floating-point sums never depend on thread scheduling.
    const std::size_t block_size = std::max<std::size_t>(64, n / 256);
    const std::size_t n_blocks = (n + block_size - 1) / block_size;
    std::vector<std::vector<double>> partial(n_blocks);

    parallel_blocks(n, block_size, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t> dist(n);
        std::vector<double> sigma(n), delta(n);
        std::vector<NodeId> order;
        order.reserve(n);
        std::vector<double> bc(n, 0.0);
        for (std::size_t s = begin; s < end; ++s)
            accumulate_source(g, static_cast<NodeId>(s), dist, sigma, delta, order, bc);
        partial[b] = std::move(bc);
    });

    std::vector<double> bc(n, 0.0);
    for (std::size_t b = 0; b < n_blocks; ++b)
        for (std::size_t v = 0; v < n; ++v) bc[v] += partial[b][v];
    // Each unordered pair was seen from both of its endpoints.
    for (double& x : bc) x /= 2.0;
    return bc;
}

}  // namespace gs
