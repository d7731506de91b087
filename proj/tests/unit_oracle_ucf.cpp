#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "maxcut/gen.hpp"
#include "maxcut/oracle.hpp"
#include "maxcut/ucf.hpp"

using namespace maxcut;

namespace {

WeightedGraph unit_k(int n) {
    std::vector<RawEdge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v, 1});
    return WeightedGraph::from_edges(n, es);
}

}  // namespace

TEST_CASE("exact maximum cut on small fixtures") {
    CHECK(brute_max_cut(unit_k(3)).value == 2);
    CHECK(brute_max_cut(unit_k(5)).value == 6);
    CHECK(brute_max_cut(WeightedGraph::from_edges(2, {{0, 1, 7}})).value == 7);

    // Bipartite graphs cut everything.
    WeightedGraph p4 = WeightedGraph::from_edges(4, {{0, 1, 2}, {1, 2, 5}, {2, 3, 1}});
    OracleResult r = brute_max_cut(p4);
    CHECK(r.value == 8);
    CHECK(r.cut.weight == 8);
    CHECK(cut_weight(p4, r.cut.side1) == r.value);

    // Triangle ties break to the lexicographically smallest side1.
    CHECK(brute_max_cut(unit_k(3)).cut.side1 == std::vector<int>{1});

    CHECK(brute_max_cut(WeightedGraph::from_edges(0, {})).value == 0);
    CHECK(brute_max_cut(WeightedGraph::from_edges(3, {})).value == 0);
}

TEST_CASE("oracle value is invariant under relabeling") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        WeightedGraph g = gen_random_connected(
            n, std::min<long long>(mmax, n + static_cast<long long>(rng() % 4)), 5, rng());
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<RawEdge> es;
        for (const Edge& e : g.edges())
            es.push_back({perm[static_cast<std::size_t>(e.u)],
                          perm[static_cast<std::size_t>(e.v)], e.w});
        WeightedGraph h = WeightedGraph::from_edges(n, es);
        CHECK(brute_max_cut(g).value == brute_max_cut(h).value);
    }
}

TEST_CASE("spanning-forest bound holds on random instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 6));
        WeightedGraph g = gen_random_connected(n, m, 5, rng());
        CHECK(assert_pt_bound(g));
    }
}

TEST_CASE("uniform-clique-forest recognizer") {
    CHECK(verify_ucf(unit_k(4)));
    CHECK(verify_ucf(WeightedGraph::from_edges(3, {{0, 1, 3}, {1, 2, 1}})));
    CHECK(verify_ucf(WeightedGraph::from_edges(2, {})));

    // K4 minus an edge: one non-clique block.
    WeightedGraph holed = WeightedGraph::from_edges(
        4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK(!verify_ucf(holed));

    // Clique with one heavy edge: non-uniform block.
    WeightedGraph heavy = WeightedGraph::from_edges(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 2}});
    CHECK(!verify_ucf(heavy));

    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(verify_ucf(gen_ucf(4, 5, 4, seed)));
}

TEST_CASE("vertex-weighted brute force matches plain oracle at zero weights") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        WeightedGraph g = gen_random_connected(
            n, std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 4)), 4,
            rng());
        UcfResult r = brute_maxcut_vertex_weights(g, VertexWeights::zeros(g.slot_count()));
        CHECK(r.value == brute_max_cut(g).value);
    }
}

TEST_CASE("linear-time solver matches brute force on random forests") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        WeightedGraph g = gen_ucf(1 + static_cast<int>(rng() % 4),
                                  2 + static_cast<int>(rng() % 4), 6, rng());
        if (g.vertex_count() > 12) continue;
        VertexWeights vw = VertexWeights::zeros(g.slot_count());
        for (int v : g.vertices()) {
            vw.w0[static_cast<std::size_t>(v)] = static_cast<Weight>(rng() % 7);
            vw.w1[static_cast<std::size_t>(v)] = static_cast<Weight>(rng() % 7);
        }
        UcfResult fast = solve_ucf(g, vw);
        UcfResult slow = brute_maxcut_vertex_weights(g, vw);
        CHECK(fast.value == slow.value);
        // Reported cut really attains the reported value.
        Weight check = fast.cut.weight;
        std::vector<char> in(static_cast<std::size_t>(g.slot_count()), false);
        for (int v : fast.cut.side1) in[static_cast<std::size_t>(v)] = true;
        for (int v : g.vertices())
            check += in[static_cast<std::size_t>(v)] ? vw.w1[static_cast<std::size_t>(v)]
                                                     : vw.w0[static_cast<std::size_t>(v)];
        CHECK(check == fast.value);
    }
}

TEST_CASE("linear-time solver rejects bad input") {
    WeightedGraph holed = WeightedGraph::from_edges(
        4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK_THROWS_AS(solve_ucf(holed, VertexWeights::zeros(4)), NotUcfError);

    WeightedGraph k3 = unit_k(3);
    VertexWeights vw = VertexWeights::zeros(3);
    vw.w0[1] = -1;
    CHECK_THROWS_AS(solve_ucf(k3, vw), BadParametersError);
}

TEST_CASE("linear-time solver on hand-checked forests") {
    // Single uniform K3, weight 2: best cut 1-2 split = 2c = 4.
    WeightedGraph k3 = WeightedGraph::from_edges(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}});
    CHECK(solve_ucf(k3, VertexWeights::zeros(3)).value == 4);

    // Vertex bonuses can overrule the balanced split.
    VertexWeights vw = VertexWeights::zeros(3);
    vw.w0[0] = 100;
    vw.w0[1] = 100;
    vw.w0[2] = 100;
    UcfResult r = solve_ucf(k3, vw);
    CHECK(r.value == 300);
    CHECK(r.cut.side1.empty());

    // Two triangles glued at vertex 2: each contributes its own 2c.
    WeightedGraph bowtie = WeightedGraph::from_edges(
        5, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 3}, {2, 4, 3}, {3, 4, 3}});
    CHECK(solve_ucf(bowtie, VertexWeights::zeros(5)).value == 2 + 6);
}
