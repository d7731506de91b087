#ifndef MAXCUT_BOUNDS_HPP
#define MAXCUT_BOUNDS_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

/// Lower-bound value scaled by 4 so that every comparison stays in exact
/// integer arithmetic. All targets and bounds in the library are quarters.
struct QuarterBound {
    Weight quarters = 0;

    std::string to_string() const {
        std::string s = std::to_string(quarters) + "/4";
        if (quarters % 4 == 0) s += " (=" + std::to_string(quarters / 4) + ")";
        return s;
    }

    friend auto operator<=>(const QuarterBound&, const QuarterBound&) = default;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] =
                parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[static_cast<std::size_t>(b)] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

}  // namespace detail

/// Weight of a minimum spanning forest, summed over all components.
/// Kruskal with deterministic tie-breaking by (weight, u, v).
inline Weight msf_weight(const WeightedGraph& g) {
    std::vector<Edge> edges(g.edges());
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
    });
    detail::UnionFind uf(static_cast<std::size_t>(g.slot_count()));
    Weight total = 0;
    for (const Edge& e : edges)
        if (uf.unite(e.u, e.v)) total += e.w;
    return total;
}

/// Poljak-Turzik lower bound on the maximum cut, in quarters:
/// 4 * (w(G)/2 + w_MSF(G)/4) = 2*w(G) + w_MSF(G).
inline QuarterBound poljak_turzik_quarters(const WeightedGraph& g) {
    return {2 * g.total_weight() + msf_weight(g)};
}

/// Weighted analog of the Edwards-Erdos bound, in quarters:
/// 2*w(G) + (n - #components). Comparison utility only.
inline QuarterBound edwards_erdos_quarters(const WeightedGraph& g) {
    int comps = g.components().second;
    return {2 * g.total_weight() + (g.vertex_count() - comps)};
}

}  // namespace maxcut

#endif
