#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "maxcut/driver.hpp"
#include "maxcut/gen.hpp"
#include "maxcut/oracle.hpp"

using namespace maxcut;

TEST_CASE("decide on hand-checked instances") {
    WeightedGraph k3 = gen_odd_clique(1);
    CHECK(decide(k3, 0).yes);             // bound itself: mu(K3) = 2 = PT
    CHECK(decide(k3, 0).path == DecisionPath::kBoundImplied);
    CHECK(!decide(k3, 4).yes);            // 2 + 1 is out of reach
    CHECK(decide(k3, -4).yes);

    WeightedGraph k5 = gen_odd_clique(2);  // mu = 6 = PT
    CHECK(decide_target(k5, 4 * 6).yes);
    CHECK(!decide_target(k5, 4 * 7).yes);
    CHECK(decide_target(k5, 0).yes);

    // Weight-2 path on 5 vertices: mu = 8, PT = 6.
    WeightedGraph tree = gen_obs6_tree(4);
    CHECK(decide(tree, 8).yes);
    CHECK(!decide(tree, 9).yes);
}

TEST_CASE("decide agrees with the oracle on random instances") {
    std::mt19937_64 rng(1001);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 6));
        WeightedGraph g = gen_random_connected(n, m, 5, rng());
        Weight mu = brute_max_cut(g).value;
        Weight pt = poljak_turzik_quarters(g).quarters;
        for (Weight kq : {Weight{-4}, Weight{0}, Weight{1}, Weight{3}, Weight{4},
                          Weight{8}, Weight{13}}) {
            CAPTURE(trial, kq);
            DecideResult r = decide(g, kq);
            CHECK(r.target_quarters == pt + kq);
            CHECK(r.yes == (4 * mu >= pt + kq));
        }
    }
}

TEST_CASE("decide is monotone in the target") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        WeightedGraph g = gen_random_connected(7, 11, 4, rng());
        bool prev = true;
        for (Weight kq = 0; kq <= 24; ++kq) {
            bool yes = decide(g, kq).yes;
            CHECK((prev || !yes));  // once no, always no
            prev = yes;
        }
    }
}

TEST_CASE("solve produces verified witnesses") {
    std::mt19937_64 rng(2002);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 6));
        WeightedGraph g = gen_random_connected(n, m, 5, rng());
        Weight mu = brute_max_cut(g).value;
        Weight pt = poljak_turzik_quarters(g).quarters;
        for (Weight kq : {Weight{0}, Weight{2}, Weight{4}, Weight{8}, Weight{16}}) {
            CAPTURE(trial, kq);
            SolveResult r = solve(g, kq);
            CHECK(r.yes == (4 * mu >= pt + kq));
            CHECK(cut_weight(g, r.cut.side1) == r.cut.weight);
            if (r.yes) CHECK(4 * r.cut.weight >= pt + kq);
            if (r.cut_is_maximum) CHECK(r.cut.weight == mu);
            CHECK(r.yes == decide(g, kq).yes);
        }
    }
}

TEST_CASE("solve handles edge cases") {
    WeightedGraph empty = WeightedGraph::from_edges(3, {});
    SolveResult r = solve(empty, 0);
    CHECK(r.yes);
    CHECK(r.cut.weight == 0);
    CHECK(!solve(empty, 1).yes);

    WeightedGraph one = WeightedGraph::from_edges(2, {{0, 1, 5}});
    SolveResult s = solve(one, 0);
    CHECK(s.yes);
    CHECK(s.cut.weight == 5);
}

TEST_CASE("subset placement bookkeeping") {
    WeightedGraph k3 = gen_odd_clique(1);
    detail::SubsetInstance inst = combine_subset(k3, {0, 1}, {0});
    CHECK(inst.base == 1);  // edge {0,1} crosses
    // Vertex 2 cuts its edge to 0 (in S1) when it stays on side 0.
    CHECK(inst.vw.w0[2] == 1);
    CHECK(inst.vw.w1[2] == 1);
    CHECK(inst.vw.w0[0] == 0);

    detail::SubsetInstance both = combine_subset(k3, {0, 1}, {0, 1});
    CHECK(both.base == 0);
    CHECK(both.vw.w0[2] == 2);
    CHECK(both.vw.w1[2] == 0);

    CHECK_THROWS_AS(combine_subset(k3, {0, 1}, {2}), SubsetNotContainedError);
}

TEST_CASE("whole-unit wrappers scale by four") {
    WeightedGraph tree = gen_obs6_tree(4);
    CHECK(decide_k(tree, 2).yes);
    CHECK(!decide_k(tree, 3).yes);
    SolveResult r = solve_k(tree, 2);
    CHECK(r.yes);
    CHECK(4 * r.cut.weight >= r.target_quarters);
}
