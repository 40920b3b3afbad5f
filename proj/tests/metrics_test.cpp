#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include <nlohmann/json.hpp>

#include "gs/errors.hpp"
#include "gs/metrics.hpp"
#include "support.hpp"

using namespace gs;

TEST_CASE("average degree") {
    CHECK(average_degree(support::triangle()) == doctest::Approx(2.0));
    CHECK(average_degree(support::path(4)) == doctest::Approx(1.5));
    CHECK(average_degree(support::from_pairs({}, {0, 1, 2})) == 0.0);
}

TEST_CASE("density") {
    CHECK(density(support::complete(4)) == doctest::Approx(1.0));
    CHECK(density(support::from_pairs({{0, 1}})) == doctest::Approx(1.0));
    CHECK_THROWS_WITH_AS(density(support::from_pairs({}, {0})),
                         doctest::Contains("density undefined"), SpecError);
}

TEST_CASE("density times (N-1) equals average degree") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5, 6, 7, 8}) {
        const Graph g = support::gnm(10 + seed * 7, 20 + seed * 11, seed);
        const double lhs = density(g) * (static_cast<double>(g.node_count()) - 1.0);
        const double rhs = average_degree(g);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(support::two_triangles()).count == 2);
    CHECK(connected_components(support::from_pairs({}, {0, 1, 2, 3, 4})).count == 5);

    const Components comp = connected_components(support::two_triangles());
    CHECK(comp.sizes == std::vector<std::uint64_t>{3, 3});
    CHECK(comp.largest() == 0);  // tie broken by first-discovered
    CHECK(comp.largest_members() == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("average clustering on closed and open structures") {
    CHECK(average_clustering(support::triangle()) == doctest::Approx(1.0));
    CHECK(average_clustering(support::complete(4)) == doctest::Approx(1.0));
    CHECK(average_clustering(support::star(4)) == 0.0);
    CHECK(average_clustering(support::two_triangles()) == doctest::Approx(1.0));
}

TEST_CASE("triangle-free graphs have zero clustering") {
    CHECK(average_clustering(support::path(6)) == 0.0);
    // C5 and K_{2,3} are triangle-free
    CHECK(average_clustering(support::from_pairs({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 0.0);
    CHECK(average_clustering(support::from_pairs(
              {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})) == 0.0);
    const Graph g = support::from_pairs({{0, 1}});  // every node below degree 2
    CHECK(average_clustering(g) == 0.0);
}

TEST_CASE("clustering averages over nodes with at least two neighbors") {
    // Triangle plus a pendant hanging off node 0: coefficients 1/3, 1, 1 for
    // the triangle corners; the pendant has one neighbor and does not dilute.
    const Graph g = support::from_pairs({{0, 1}, {1, 2}, {0, 2}, {0, 9}});
    CHECK(average_clustering(g) == doctest::Approx((1.0 / 3.0 + 1.0 + 1.0) / 3.0));
}

TEST_CASE("BFS distances") {
    const Graph p3 = support::path(3);
    CHECK(distances_from(p3, 0) == std::vector<std::uint32_t>{0, 1, 2});

    const Graph split = support::from_pairs({{0, 1}, {2, 3}});
    const auto d = distances_from(split, 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == kUnreachable);
    CHECK(d[3] == kUnreachable);

    CHECK_THROWS_AS(distances_from(p3, 99), SpecError);
}

TEST_CASE("BFS distances equal Floyd-Warshall on random graphs") {
    for (int round = 0; round < 20; ++round) {
        const Graph g = support::gnm(40, 70 + round, 600 + round);
        const auto fw = support::floyd_warshall(g);
        for (NodeId s = 0; s < g.node_count(); ++s) {
            const auto bfs = distances_from(g, s);
            for (NodeId t = 0; t < g.node_count(); ++t) {
                if (fw[s][t] >= support::kFwInf)
                    CHECK(bfs[t] == kUnreachable);
                else
                    CHECK(bfs[t] == static_cast<std::uint32_t>(fw[s][t]));
            }
        }
    }
}

TEST_CASE("diameter and average path length on known graphs") {
    const DiameterApl p5 = diameter_and_apl(support::path(5));
    CHECK(p5.diameter == 4);
    CHECK(p5.avg_path_length == doctest::Approx(2.0));

    const DiameterApl k4 = diameter_and_apl(support::complete(4));
    CHECK(k4.diameter == 1);
    CHECK(k4.avg_path_length == doctest::Approx(1.0));

    // Disconnected: measured on the largest component only.
    const DiameterApl two = diameter_and_apl(support::two_triangles());
    CHECK(two.diameter == 1);
    CHECK(two.avg_path_length == doctest::Approx(1.0));

    CHECK_THROWS_AS(diameter_and_apl(support::from_pairs({}, {0, 1})), SpecError);
}

TEST_CASE("diameter and APL are identical at any worker count") {
    const Graph g = support::connected_gnm(120, 300, 44);
    const DiameterApl one = diameter_and_apl(g, 1);
    for (int workers : {2, 5, 8}) {
        const DiameterApl many = diameter_and_apl(g, workers);
        CHECK(many.diameter == one.diameter);
        CHECK(many.avg_path_length == one.avg_path_length);  // bitwise, integer sums
    }
}

TEST_CASE("adding an edge inside the component never increases diameter or APL") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5}) {
        const Graph g = support::connected_gnm(30, 45, seed);
        const DiameterApl before = diameter_and_apl(g);

        // First absent pair; the graph stays connected, same node set.
        for (NodeId u = 0; u < g.node_count(); ++u) {
            bool added = false;
            for (NodeId v = u + 1; v < g.node_count(); ++v) {
                if (g.has_edge(u, v)) continue;
                std::vector<std::pair<Label, Label>> edges;
                for (const auto& [a, b] : g.edges()) edges.emplace_back(g.label(a), g.label(b));
                edges.emplace_back(g.label(u), g.label(v));
                const DiameterApl after = diameter_and_apl(Graph({}, edges));
                CHECK(after.diameter <= before.diameter);
                CHECK(after.avg_path_length <= before.avg_path_length + 1e-12);
                added = true;
                break;
            }
            if (added) break;
        }
    }
}

TEST_CASE("modularity closed forms") {
    const Graph two = support::two_triangles();
    Partition all_one;
    all_one.community.assign(6, 0);
    CHECK(modularity(two, all_one) == 0.0);

    Partition natural;
    natural.community = {0, 0, 0, 1, 1, 1};
    CHECK(modularity(two, natural) == 0.5);

    const Graph tri = support::triangle();
    Partition singletons;
    singletons.community = {0, 1, 2};
    CHECK(modularity(tri, singletons) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("modularity is invariant under community relabeling") {
    const Graph g = support::connected_gnm(24, 60, 8);
    const Partition p = louvain_communities(g, 1);
    Partition relabeled = p;
    const std::uint32_t k = p.community_count();
    for (auto& c : relabeled.community) c = (c + 3) % k + 10;  // non-dense relabel
    // Make labels dense again under a different numbering.
    std::map<std::uint32_t, std::uint32_t> remap;
    for (auto& c : relabeled.community) {
        if (!remap.count(c)) remap[c] = 1000 - static_cast<std::uint32_t>(remap.size());
        c = remap[c];
    }
    CHECK(modularity(g, p) == doctest::Approx(modularity(g, relabeled)).epsilon(1e-12));
}

TEST_CASE("modularity rejects mismatched partitions and edgeless graphs") {
    Partition p;
    p.community = {0, 0};
    CHECK_THROWS_AS(modularity(support::triangle(), p), SpecError);
    p.community = {0, 0, 0};
    CHECK_THROWS_AS(modularity(support::from_pairs({}, {0, 1, 2}), p), SpecError);
}

TEST_CASE("louvain separates two disjoint triangles") {
    const Graph g = support::two_triangles();

    // Exhaustive check over all 203 partitions of 6 nodes: the two-triangle
    // split is the unique maximizer of Q.
    Partition best;
    double best_q = -2.0;
    support::for_each_partition(6, [&](const std::vector<std::uint32_t>& assign) {
        Partition p;
        p.community = assign;
        const double q = modularity(g, p);
        if (q > best_q) {
            best_q = q;
            best = p;
        }
    });
    CHECK(best_q == 0.5);
    CHECK(best.community[0] == best.community[1]);
    CHECK(best.community[1] == best.community[2]);
    CHECK(best.community[3] == best.community[4]);
    CHECK(best.community[4] == best.community[5]);
    CHECK(best.community[0] != best.community[3]);

    for (std::uint64_t seed : {0, 1, 2, 3, 17}) {
        const Partition p = louvain_communities(g, seed);
        CHECK(modularity(g, p) == 0.5);
        CHECK(p.community_count() == 2);
    }
}

TEST_CASE("louvain keeps a clique together") {
    const Partition p = louvain_communities(support::complete(4), 9);
    CHECK(p.community_count() == 1);
}

TEST_CASE("louvain never loses to the single-community partition") {
    for (std::uint64_t seed : {1, 2, 3, 4, 5, 6}) {
        const Graph g = support::connected_gnm(40, 90, seed * 13);
        const Partition p = louvain_communities(g, seed);
        CHECK(modularity(g, p) >= 0.0);
    }
}

TEST_CASE("louvain finds planted cliques in a ring") {
    // Five 6-cliques joined in a ring by single edges: the planted partition
    // is obvious and Q is high.
    std::vector<std::pair<Label, Label>> edges;
    const int k = 5, size = 6;
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) edges.emplace_back(c * size + i, c * size + j);
    for (int c = 0; c < k; ++c) edges.emplace_back(c * size, ((c + 1) % k) * size + 1);
    const Graph g = support::from_pairs(edges);

    const Partition p = louvain_communities(g, 3);
    CHECK(p.community_count() == k);
    for (int c = 0; c < k; ++c)
        for (int i = 1; i < size; ++i)
            CHECK(p.community[c * size] == p.community[c * size + i]);
    CHECK(modularity(g, p) > 0.7);
}

TEST_CASE("louvain is deterministic per seed") {
    const Graph g = support::connected_gnm(60, 150, 77);
    const Partition a = louvain_communities(g, 5);
    const Partition b = louvain_communities(g, 5);
    CHECK(a.community == b.community);
}

TEST_CASE("louvain refuses edgeless graphs") {
    CHECK_THROWS_WITH_AS(louvain_communities(support::from_pairs({}, {0, 1}), 1),
                         doctest::Contains("modularity undefined"), SpecError);
}

TEST_CASE("betweenness on known graphs") {
    const auto p3 = betweenness_centrality(support::path(3));
    CHECK(p3[0] == 0.0);
    CHECK(p3[1] == doctest::Approx(1.0));
    CHECK(p3[2] == 0.0);

    for (double b : betweenness_centrality(support::complete(4))) CHECK(b == 0.0);

    const Graph s5 = support::star(5);
    const auto bs = betweenness_centrality(s5);
    CHECK(bs[*s5.internal_id(0)] == doctest::Approx(10.0));  // C(5,2) leaf pairs
    for (int leaf = 1; leaf <= 5; ++leaf) CHECK(bs[*s5.internal_id(leaf)] == 0.0);
}

TEST_CASE("betweenness matches naive path counting on random graphs") {
    for (int round = 0; round < 20; ++round) {
        const Graph g = support::gnm(20, 40, 900 + round);
        const auto fast = betweenness_centrality(g);
        const auto slow = support::naive_betweenness(g);
        for (std::size_t v = 0; v < fast.size(); ++v)
            CHECK(fast[v] == doctest::Approx(slow[v]).epsilon(1e-9));
    }
}

TEST_CASE("betweenness is identical at any worker count") {
    const Graph g = support::connected_gnm(150, 400, 55);
    const auto one = betweenness_centrality(g, 1);
    for (int workers : {2, 8}) {
        const auto many = betweenness_centrality(g, workers);
        REQUIRE(many.size() == one.size());
        for (std::size_t v = 0; v < one.size(); ++v) CHECK(many[v] == one[v]);  // bitwise
    }
}

TEST_CASE("full report on two disjoint triangles") {
    const PropertyReport r = full_report(support::two_triangles(), 3);
    CHECK(r.connected_components == 2);
    CHECK(r.avg_clustering == doctest::Approx(1.0));
    CHECK(r.diameter == 1);
    CHECK(r.modularity == doctest::Approx(0.5));
    CHECK(r.largest_component_fraction == doctest::Approx(0.5));
}

TEST_CASE("full report on a clique") {
    const PropertyReport r = full_report(support::complete(4), 1);
    CHECK(r.density == doctest::Approx(1.0));
    CHECK(r.avg_path_length == doctest::Approx(1.0));
    CHECK(r.connected_components == 1);
    CHECK(r.modularity == 0.0);
    CHECK(r.largest_component_fraction == doctest::Approx(1.0));
}

TEST_CASE("full report guards its preconditions") {
    CHECK_THROWS_AS(full_report(support::from_pairs({}, {0, 1, 2}), 1), SpecError);
}

TEST_CASE("report JSON carries exactly the eight fields") {
    const PropertyReport r = full_report(support::two_triangles(), 3);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j.size() == 8);
    for (const char* key :
         {"avg_degree", "density", "modularity", "avg_clustering", "diameter", "avg_path_length",
          "connected_components", "largest_component_fraction"})
        CHECK(j.contains(key));

    const PropertyReport back = PropertyReport::from_json(r.to_json());
    CHECK(back.avg_degree == r.avg_degree);
    CHECK(back.diameter == r.diameter);
    CHECK(back.modularity == r.modularity);
    CHECK(back.largest_component_fraction == r.largest_component_fraction);
}

TEST_CASE("partition CSV uses original labels") {
    const Graph g = support::from_pairs({{5, 7}, {7, 9}, {5, 9}});
    Partition p;
    p.community = {0, 0, 0};
    const std::string csv = p.to_csv(g);
    CHECK(csv == "node_label,community_id\n5,0\n7,0\n9,0\n");
}
