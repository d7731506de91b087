#ifndef MAXCUT_GEN_HPP
#define MAXCUT_GEN_HPP

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

/// Path on i+1 vertices, every edge weight 2. The family where the
/// Poljak-Turzik bound beats the Edwards-Erdos analog by (6/4)i vs (5/4)i.
inline WeightedGraph gen_obs6_tree(int i) {
    if (i < 1) throw BadParametersError("obs6-tree needs i >= 1");
    std::vector<RawEdge> edges;
    for (int v = 0; v < i; ++v) edges.push_back({v, v + 1, 2});
    return WeightedGraph::from_edges(i + 1, edges);
}

/// Unit clique on 2t+1 vertices; the bound is tight on these.
inline WeightedGraph gen_odd_clique(int t) {
    if (t < 1) throw BadParametersError("odd-clique needs t >= 1");
    int n = 2 * t + 1;
    std::vector<RawEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return WeightedGraph::from_edges(n, edges);
}

/// Connected random graph: a random spanning tree plus extra distinct
/// edges, weights uniform in [1, wmax].
inline WeightedGraph gen_random_connected(int n, long long m, Weight wmax,
                                          std::uint64_t seed) {
    if (n < 1 || wmax < 1) throw BadParametersError("random needs n >= 1, wmax >= 1");
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m)
        throw BadParametersError("random needs n-1 <= m <= n(n-1)/2");
    std::mt19937_64 rng(seed);
    auto weight = [&] {
        return static_cast<Weight>(rng() % static_cast<std::uint64_t>(wmax)) + 1;
    };
    std::set<std::pair<int, int>> used;
    std::vector<RawEdge> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        used.insert({u, v});
        edges.push_back({u, v, weight()});
    }
    while (static_cast<long long>(edges.size()) < m) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) continue;
        edges.push_back({u, v, weight()});
    }
    return WeightedGraph::from_edges(n, edges);
}

/// Random uniform-clique-forest: uniform cliques glued at shared vertices,
/// occasionally starting fresh components.
inline WeightedGraph gen_ucf(int blocks, int maxblock, Weight wmax,
                             std::uint64_t seed) {
    if (blocks < 1 || maxblock < 2 || wmax < 1)
        throw BadParametersError("ucf needs blocks >= 1, maxblock >= 2, wmax >= 1");
    std::mt19937_64 rng(seed);
    std::vector<RawEdge> edges;
    std::vector<int> verts;
    int next = 0;
    for (int b = 0; b < blocks; ++b) {
        int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(maxblock - 1));
        Weight c = static_cast<Weight>(rng() % static_cast<std::uint64_t>(wmax)) + 1;
        std::vector<int> members;
        if (!verts.empty() && rng() % 4 != 0)
            members.push_back(verts[rng() % verts.size()]);
        while (static_cast<int>(members.size()) < size) {
            members.push_back(next++);
            verts.push_back(members.back());
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.push_back({members[i], members[j], c});
    }
    return WeightedGraph::from_edges(next, edges);
}

/// Hand-built instances on which the selector's first pick is the named
/// rule; `seed` chooses among five variants per rule.
inline WeightedGraph gen_rule_gallery(int rule_id, std::uint64_t seed) {
    if (rule_id < 1 || rule_id > 8)
        throw BadParametersError("rule-gallery needs a rule id in 1..8");
    int v = static_cast<int>(seed % 5);
    std::vector<RawEdge> edges;
    auto clique = [&](int lo, int hi, Weight c) {  // vertices lo..hi inclusive
        for (int a = lo; a <= hi; ++a)
            for (int b = a + 1; b <= hi; ++b) edges.push_back({a, b, c});
    };
    switch (rule_id) {
        case 1: {
            // Clique with one overweight edge away from the attachment.
            int q = 4 + v % 3;
            clique(0, q - 1, 1);
            int a = 1 + v % 2;
            edges.push_back({a, a + 1, 1 + v % 2});  // merges to weight 2 or 3
            return WeightedGraph::from_edges(q, edges);
        }
        case 2: {
            if (v == 4) return gen_obs6_tree(3);
            int q = 3 + v;
            clique(0, q - 1, 1 + static_cast<Weight>(v % 3));
            return WeightedGraph::from_edges(q, edges);
        }
        case 3: {
            // Clique, uniform except at the attachment vertex 0.
            int q = 3 + v % 3;
            clique(0, q - 1, 1);
            edges.push_back({0, 1, 1 + static_cast<Weight>(v % 2)});
            return WeightedGraph::from_edges(q, edges);
        }
        case 4: {
            // Uniform clique X = {1..s}, apex 0 adjacent to part of it.
            int s = 3 + v % 3;
            Weight c = 1 + static_cast<Weight>(v % 4);
            clique(1, s, c);
            int r = 2 + v % 2;
            if (r >= s) r = s - 1;
            for (int t = 1; t <= r; ++t) edges.push_back({0, t, c});
            return WeightedGraph::from_edges(s + 1, edges);
        }
        case 5: {
            // X = {1..s} uniform except the heavy edge {1,2}; 0 sees only 1,2.
            int s = 4 + v % 2;
            Weight c = 1 + static_cast<Weight>(v % 2);
            clique(1, s, c);
            edges.push_back({1, 2, 1 + static_cast<Weight>(v % 3)});  // merge: heavier
            edges.push_back({0, 1, c});
            edges.push_back({0, 2, c});
            return WeightedGraph::from_edges(s + 1, edges);
        }
        case 6: {
            // Odd cycles: the triple case with cheap boundary edges.
            int q = 5 + 2 * (v % 3);
            Weight c = 1 + static_cast<Weight>(v % 2);
            for (int t = 0; t < q; ++t) edges.push_back({t, (t + 1) % q, c});
            return WeightedGraph::from_edges(q, edges);
        }
        case 7: {
            // Path 0-1-2 closed through 3, heavy spokes, pendant 4.
            Weight w = 1 + static_cast<Weight>(v % 3);
            Weight spoke = 2 * w + static_cast<Weight>(v % 2);
            edges.push_back({0, 1, w});
            edges.push_back({1, 2, w});
            edges.push_back({0, 3, spoke});
            edges.push_back({2, 3, spoke});
            edges.push_back({1, 3, spoke});
            edges.push_back({3, 4, 1 + static_cast<Weight>(v % 2)});
            return WeightedGraph::from_edges(5, edges);
        }
        default: {
            if (v == 4) {
                for (int t = 0; t < 4; ++t) edges.push_back({t, (t + 1) % 4, 2});
                return WeightedGraph::from_edges(4, edges);
            }
            // 0 sees only the non-adjacent pair {1,2}; {3..} completes both
            // near-cliques.
            int s = 4 + v % 3;  // highest vertex id
            Weight c = 1 + static_cast<Weight>(v);
            clique(1, s, c);
            std::erase_if(edges, [](const RawEdge& e) { return e.u == 1 && e.v == 2; });
            edges.push_back({0, 1, c});
            edges.push_back({0, 2, c});
            return WeightedGraph::from_edges(s + 1, edges);
        }
    }
}

}  // namespace maxcut

#endif
