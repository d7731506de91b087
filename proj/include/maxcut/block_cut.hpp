#ifndef MAXCUT_BLOCK_CUT_HPP
#define MAXCUT_BLOCK_CUT_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "maxcut/graph.hpp"

namespace maxcut {

/// One biconnected component. Vertices and edges are sorted ascending.
/// Isolated vertices appear as singleton blocks with no edges.
struct Block {
    std::vector<int> vertices;
    std::vector<Edge> edges;

    int min_vertex() const { return vertices.front(); }
    bool is_clique() const {
        auto n = static_cast<std::size_t>(vertices.size());
        return edges.size() == n * (n - 1) / 2;
    }
    /// True when all edges carry the same weight (vacuously for <= 1 edge).
    bool is_uniform() const {
        for (const Edge& e : edges)
            if (e.w != edges.front().w) return false;
        return true;
    }
};

/// Bipartite forest of blocks and cut vertices (articulation vertices).
struct BlockCutForest {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;               // ascending
    std::vector<std::pair<int, int>> forest_edges;  // (block index, cut vertex)
    std::vector<int> leaf_blocks;                // blocks with <= 1 cut vertex

    bool is_cut_vertex(int v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }

    /// Cut vertices contained in block b, ascending.
    std::vector<int> block_cut_vertices(int b) const {
        std::vector<int> out;
        for (int v : blocks[static_cast<std::size_t>(b)].vertices)
            if (is_cut_vertex(v)) out.push_back(v);
        return out;
    }
};

/// Computes the block-cut forest with a single iterative DFS (lowpoints,
/// edge stack). Children are visited in ascending vertex order so the
/// decomposition is deterministic.
inline BlockCutForest block_cut_forest(const WeightedGraph& g) {
    const int n = g.slot_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    BlockCutForest out;

    struct Frame {
        int v;
        int parent;
        std::size_t next;  // index into neighbors(v)
    };
    std::vector<Frame> stack;
    std::vector<int> block_count(static_cast<std::size_t>(n), 0);
    int timer = 0;

    auto pop_block = [&](int u, int w) {
        Block b;
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            bool last = (std::min(e.u, e.v) == std::min(u, w) &&
                         std::max(e.u, e.v) == std::max(u, w));
            edge_stack.pop_back();
            b.edges.push_back(e);
            if (last) break;
        }
        std::vector<int>& vs = b.vertices;
        for (const Edge& e : b.edges) {
            vs.push_back(e.u);
            vs.push_back(e.v);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::sort(b.edges.begin(), b.edges.end(), [](const Edge& a, const Edge& c) {
            return std::tie(a.u, a.v) < std::tie(c.u, c.v);
        });
        for (int v : vs) ++block_count[static_cast<std::size_t>(v)];
        out.blocks.push_back(std::move(b));
    };

    for (int root : g.vertices()) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        if (g.degree(root) == 0) {
            // Isolated vertex: singleton block.
            disc[static_cast<std::size_t>(root)] = timer++;
            Block b;
            b.vertices.push_back(root);
            ++block_count[static_cast<std::size_t>(root)];
            out.blocks.push_back(std::move(b));
            continue;
        }
        stack.push_back({root, -1, 0});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                auto [to, w] = nb[f.next++];
                if (to == f.parent) {
                    // Skip one parent edge occurrence (simple graph: the only one).
                    f.parent = -2;
                    continue;
                }
                if (disc[static_cast<std::size_t>(to)] == -1) {
                    edge_stack.push_back({std::min(f.v, to), std::max(f.v, to), w});
                    disc[static_cast<std::size_t>(to)] = low[static_cast<std::size_t>(to)] =
                        timer++;
                    stack.push_back({to, f.v, 0});
                } else if (disc[static_cast<std::size_t>(to)] < disc[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back({std::min(f.v, to), std::max(f.v, to), w});
                    low[static_cast<std::size_t>(f.v)] = std::min(
                        low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(to)]);
                }
            } else {
                int child = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int parent = stack.back().v;
                    low[static_cast<std::size_t>(parent)] = std::min(
                        low[static_cast<std::size_t>(parent)],
                        low[static_cast<std::size_t>(child)]);
                    if (low[static_cast<std::size_t>(child)] >=
                        disc[static_cast<std::size_t>(parent)])
                        pop_block(parent, child);
                }
            }
        }
    }

    for (int v = 0; v < n; ++v)
        if (block_count[static_cast<std::size_t>(v)] >= 2) out.cut_vertices.push_back(v);
    for (std::size_t b = 0; b < out.blocks.size(); ++b) {
        int cuts = 0;
        for (int v : out.blocks[b].vertices)
            if (out.is_cut_vertex(v)) {
                out.forest_edges.emplace_back(static_cast<int>(b), v);
                ++cuts;
            }
        if (cuts <= 1) out.leaf_blocks.push_back(static_cast<int>(b));
    }
    return out;
}

}  // namespace maxcut

#endif
