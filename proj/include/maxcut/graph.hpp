#ifndef MAXCUT_GRAPH_HPP
#define MAXCUT_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "maxcut/errors.hpp"

namespace maxcut {

using Weight = std::int64_t;

/// Largest weight accepted for a single (merged) edge. Keeps
/// 2*w(G) + w_MSF(G) clear of int64 overflow for any feasible edge count.
inline constexpr Weight kMaxEdgeWeight = Weight{1} << 32;

struct RawEdge {
    int u = 0;
    int v = 0;
    Weight w = 1;
};

struct Edge {
    int u;  // u < v
    int v;
    Weight w;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple graph with positive integer edge weights. Vertex ids live in a
/// fixed slot space [0, slot_count); removing vertices never renumbers the
/// survivors, which keeps reduction traces replayable. Immutable after
/// construction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Builds a graph from a (possibly parallel-edged) edge list. Parallel
    /// edges are merged by summing their weights; self-loops and
    /// non-positive weights are rejected.
    static WeightedGraph from_edges(int n, std::span<const RawEdge> raw) {
        if (n < 0) throw BadParametersError("negative vertex count");
        std::map<std::pair<int, int>, Weight> merged;
        for (const RawEdge& e : raw) {
            if (e.u < 0 || e.u >= n) throw VertexOutOfRangeError(e.u);
            if (e.v < 0 || e.v >= n) throw VertexOutOfRangeError(e.v);
            if (e.u == e.v) throw SelfLoopError(e.u);
            if (e.w < 1) throw BadWeightError("edge weight must be >= 1");
            if (e.w > kMaxEdgeWeight)
                throw BadWeightError("edge weight exceeds 2^32");
            merged[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.w;
        }
        WeightedGraph g;
        g.n_ = n;
        g.present_.assign(static_cast<std::size_t>(n), true);
        g.edges_.reserve(merged.size());
        for (const auto& [key, w] : merged) g.edges_.push_back({key.first, key.second, w});
        g.rebuild_index();
        return g;
    }

    static WeightedGraph from_edges(int n, std::initializer_list<RawEdge> raw) {
        return from_edges(n, std::span<const RawEdge>(raw.begin(), raw.size()));
    }

    int slot_count() const { return n_; }

    bool present(int v) const {
        return v >= 0 && v < n_ && present_[static_cast<std::size_t>(v)];
    }

    int vertex_count() const { return vertex_count_; }

    /// Present vertex ids in ascending order.
    const std::vector<int>& vertices() const { return vertices_; }

    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t edge_count() const { return edges_.size(); }

    Weight total_weight() const { return total_weight_; }

    /// Neighbors of v as (vertex, weight), ascending by vertex id.
    const std::vector<std::pair<int, Weight>>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const { return weight_or_zero(u, v) > 0; }

    /// Weight of edge {u,v}, or 0 when absent.
    Weight weight_or_zero(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(nb.begin(), nb.end(), v,
                                   [](const auto& p, int x) { return p.first < x; });
        return (it != nb.end() && it->first == v) ? it->second : 0;
    }

    /// Copy of the graph with the given vertices (and incident edges) removed.
    WeightedGraph without(std::span<const int> removed) const {
        std::vector<char> gone(static_cast<std::size_t>(n_), false);
        for (int v : removed) {
            check_vertex(v);
            gone[static_cast<std::size_t>(v)] = true;
        }
        WeightedGraph g;
        g.n_ = n_;
        g.present_ = present_;
        for (int v = 0; v < n_; ++v)
            if (gone[static_cast<std::size_t>(v)]) g.present_[static_cast<std::size_t>(v)] = false;
        for (const Edge& e : edges_)
            if (!gone[static_cast<std::size_t>(e.u)] && !gone[static_cast<std::size_t>(e.v)])
                g.edges_.push_back(e);
        g.rebuild_index();
        return g;
    }

    WeightedGraph without(std::initializer_list<int> removed) const {
        return without(std::span<const int>(removed.begin(), removed.size()));
    }

    /// Subgraph induced on `keep` (ids preserved, everything else absent).
    WeightedGraph induced(std::span<const int> keep) const {
        std::vector<char> in(static_cast<std::size_t>(n_), false);
        for (int v : keep) {
            check_vertex(v);
            in[static_cast<std::size_t>(v)] = true;
        }
        WeightedGraph g;
        g.n_ = n_;
        g.present_.assign(static_cast<std::size_t>(n_), false);
        for (int v = 0; v < n_; ++v)
            g.present_[static_cast<std::size_t>(v)] = in[static_cast<std::size_t>(v)] != 0;
        for (const Edge& e : edges_)
            if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
                g.edges_.push_back(e);
        g.rebuild_index();
        return g;
    }

    WeightedGraph induced(std::initializer_list<int> keep) const {
        return induced(std::span<const int>(keep.begin(), keep.size()));
    }

    /// Component id per slot (-1 for absent vertices) and component count.
    std::pair<std::vector<int>, int> components() const {
        std::vector<int> comp(static_cast<std::size_t>(n_), -1);
        int count = 0;
        std::vector<int> stack;
        for (int s : vertices_) {
            if (comp[static_cast<std::size_t>(s)] != -1) continue;
            comp[static_cast<std::size_t>(s)] = count;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (const auto& [to, w] : adj_[static_cast<std::size_t>(v)]) {
                    (void)w;
                    if (comp[static_cast<std::size_t>(to)] == -1) {
                        comp[static_cast<std::size_t>(to)] = count;
                        stack.push_back(to);
                    }
                }
            }
            ++count;
        }
        return {std::move(comp), count};
    }

    bool connected() const {
        if (vertex_count_ <= 1) return true;
        return components().second == 1;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_ || !present_[static_cast<std::size_t>(v)])
            throw VertexOutOfRangeError(v);
    }

    void rebuild_index() {
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge& a, const Edge& b) {
                      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
                  });
        adj_.assign(static_cast<std::size_t>(n_), {});
        total_weight_ = 0;
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.w);
            adj_[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.w);
            total_weight_ += e.w;
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
        vertices_.clear();
        for (int v = 0; v < n_; ++v)
            if (present_[static_cast<std::size_t>(v)]) vertices_.push_back(v);
        vertex_count_ = static_cast<int>(vertices_.size());
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, Weight>>> adj_;
    std::vector<char> present_;
    std::vector<int> vertices_;
    int vertex_count_ = 0;
    Weight total_weight_ = 0;
};

/// A cut: the vertex set on side 1 plus the total weight of crossing edges.
struct Cut {
    std::vector<int> side1;  // ascending vertex ids
    Weight weight = 0;
};

/// Total weight of edges with exactly one endpoint in `side1`.
inline Weight cut_weight(const WeightedGraph& g, std::span<const int> side1) {
    std::vector<char> in(static_cast<std::size_t>(g.slot_count()), false);
    for (int v : side1) {
        if (!g.present(v)) throw VertexOutOfRangeError(v);
        in[static_cast<std::size_t>(v)] = true;
    }
    Weight w = 0;
    for (const Edge& e : g.edges())
        if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) w += e.w;
    return w;
}

inline Weight cut_weight(const WeightedGraph& g, std::initializer_list<int> side1) {
    return cut_weight(g, std::span<const int>(side1.begin(), side1.size()));
}

inline Cut make_cut(const WeightedGraph& g, std::vector<int> side1) {
    std::sort(side1.begin(), side1.end());
    side1.erase(std::unique(side1.begin(), side1.end()), side1.end());
    Weight w = cut_weight(g, side1);
    return Cut{std::move(side1), w};
}

}  // namespace maxcut

#endif
