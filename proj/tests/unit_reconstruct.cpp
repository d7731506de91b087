#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "maxcut/bounds.hpp"
#include "maxcut/gen.hpp"
#include "maxcut/oracle.hpp"
#include "maxcut/reconstruct.hpp"
#include "maxcut/reduce.hpp"

using namespace maxcut;

namespace {

std::vector<int> subset_of(const std::vector<int>& verts, std::uint32_t bits) {
    std::vector<int> out;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (bits & (std::uint32_t{1} << i)) out.push_back(verts[i]);
    return out;
}

/// Every cut of the reduced graph must extend to a cut of the original
/// whose quarter gain covers the bound shift plus the step's budget cost.
void check_extension_sound(const WeightedGraph& g) {
    ReductionOutcome out = reduce(g, 1000, ReduceMode::kFull);
    REQUIRE(!out.trace.empty());
    const ReductionStep& step = out.trace.front();
    WeightedGraph reduced = g.without(step.removed);
    Weight shift = poljak_turzik_quarters(g).quarters -
                   poljak_turzik_quarters(reduced).quarters + step.k_delta_quarters;

    const std::vector<int>& rv = reduced.vertices();
    REQUIRE(rv.size() <= 16);
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << rv.size()); ++bits) {
        std::vector<int> side1 = subset_of(rv, bits);
        Cut inner = make_cut(reduced, side1);
        Cut outer = replay_extensions(g, {step}, reduced, inner);
        CAPTURE(step.instance.rule_id(), bits);
        // Exactly the removed vertices get placed.
        CHECK(outer.side1.size() <= inner.side1.size() + step.removed.size() +
                                        (g.vertex_count() - reduced.vertex_count()));
        CHECK(4 * (outer.weight - inner.weight) >= shift);
    }
}

}  // namespace

TEST_CASE("bound-achieving cuts for residual shapes") {
    // Uniform cliques.
    for (int n : {2, 3, 4, 5, 6, 7}) {
        std::vector<RawEdge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.push_back({u, v, 3});
        WeightedGraph g = WeightedGraph::from_edges(n, es);
        std::vector<int> side1 = detail::pt_achieving_cut(g);
        CHECK(4 * cut_weight(g, side1) >= poljak_turzik_quarters(g).quarters);
    }
    // Uniform clique plus an apex with arbitrary weights.
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        int s = 2 + static_cast<int>(rng() % 5);
        Weight c = 1 + static_cast<Weight>(rng() % 4);
        std::vector<RawEdge> es;
        for (int u = 1; u <= s; ++u)
            for (int v = u + 1; v <= s; ++v) es.push_back({u, v, c});
        int spokes = 1 + static_cast<int>(rng() % s);
        for (int t = 1; t <= spokes; ++t)
            es.push_back({0, t, 1 + static_cast<Weight>(rng() % 6)});
        WeightedGraph g = WeightedGraph::from_edges(s + 1, es);
        std::vector<int> side1 = detail::pt_achieving_cut(g);
        Weight exact = brute_max_cut(g).value;
        CHECK(cut_weight(g, side1) == exact);  // apex shape is solved exactly
    }
    // Disconnected mixtures.
    WeightedGraph mix = WeightedGraph::from_edges(
        6, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}, {3, 4, 5}});
    std::vector<int> side1 = detail::pt_achieving_cut(mix);
    CHECK(4 * cut_weight(mix, side1) >= poljak_turzik_quarters(mix).quarters);
}

TEST_CASE("pair-removal cut beats the strengthened bound") {
    // Triangle with one heavy edge: the heavy pair earns the extra quarter.
    WeightedGraph tri = WeightedGraph::from_edges(3, {{0, 1, 3}, {1, 2, 1}, {0, 2, 1}});
    std::vector<int> side1 = detail::claim18_cut(tri, 0, 1);
    CHECK(4 * cut_weight(tri, side1) >= 2 * tri.total_weight() + msf_weight(tri) + 1);

    // Non-uniform cliques, removing the endpoints of the heaviest edge.
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        std::vector<RawEdge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.push_back({u, v, 1});
        es.push_back({0, 1, 1 + static_cast<Weight>(rng() % 4)});
        WeightedGraph g = WeightedGraph::from_edges(n, es);
        std::vector<int> cut = detail::claim18_cut(g, 0, 1);
        CHECK(4 * cut_weight(g, cut) >= 2 * g.total_weight() + msf_weight(g) + 1);
    }
}

TEST_CASE("single-step extensions are sound for every rule") {
    for (int rule = 1; rule <= 8; ++rule)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CAPTURE(rule, seed);
            check_extension_sound(gen_rule_gallery(rule, seed));
        }
}

TEST_CASE("single-step extensions are sound on random graphs") {
    std::mt19937_64 rng(321);
    int done = 0;
    for (int trial = 0; done < 60 && trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 6));
        WeightedGraph g = gen_random_connected(n, m, 4, rng());
        CAPTURE(trial);
        check_extension_sound(g);
        ++done;
    }
    CHECK(done == 60);
}

TEST_CASE("full trace replay reaches the shifted bound") {
    std::mt19937_64 rng(654);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng() % 9);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 8));
        WeightedGraph g = gen_random_connected(n, m, 4, rng());
        CAPTURE(trial);
        ReductionOutcome out = reduce(g, 0, ReduceMode::kFull);
        Weight paid = 0;
        for (const ReductionStep& s : out.trace) paid += s.k_delta_quarters;
        Cut cut = replay_extensions(g, out.trace, out.residual, Cut{});
        // Every paid step adds one quarter above the bound.
        CHECK(4 * cut.weight >= poljak_turzik_quarters(g).quarters + paid);
        CHECK(cut.weight <= brute_max_cut(g).value);
    }
}

TEST_CASE("replay validates the residual cut") {
    WeightedGraph g = WeightedGraph::from_edges(3, {{0, 1, 3}, {1, 2, 1}});
    ReductionOutcome out = reduce(g, 0, ReduceMode::kFull);
    Cut bogus{{0}, 0};  // vertex 0 is not in the residual
    CHECK_THROWS_AS(replay_extensions(g, out.trace, out.residual, bogus),
                    VertexOutOfRangeError);
}
