#ifndef MAXCUT_UCF_HPP
#define MAXCUT_UCF_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "maxcut/block_cut.hpp"
#include "maxcut/graph.hpp"
#include "maxcut/oracle.hpp"

namespace maxcut {

/// Per-vertex side bonuses: w0 is earned by vertices outside the cut set,
/// w1 by vertices inside.
struct VertexWeights {
    std::vector<Weight> w0;
    std::vector<Weight> w1;

    static VertexWeights zeros(int slots) {
        return {std::vector<Weight>(static_cast<std::size_t>(slots), 0),
                std::vector<Weight>(static_cast<std::size_t>(slots), 0)};
    }
    Weight delta(int v) const {
        return w1[static_cast<std::size_t>(v)] - w0[static_cast<std::size_t>(v)];
    }
};

/// True iff every block of G is a clique whose edges share one weight.
inline bool verify_ucf(const WeightedGraph& g) {
    BlockCutForest bcf = block_cut_forest(g);
    for (const Block& b : bcf.blocks)
        if (!b.is_clique() || !b.is_uniform()) return false;
    return true;
}

struct UcfResult {
    Weight value = 0;
    Cut cut;
};

/// Exact MaxCut-with-vertex-weights by full enumeration (test oracle).
inline UcfResult brute_maxcut_vertex_weights(const WeightedGraph& g,
                                             const VertexWeights& vw) {
    const std::vector<int>& verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    if (n > 22) throw TooLargeError("brute_maxcut_vertex_weights limited to 22 vertices");

    std::vector<std::vector<std::pair<int, Weight>>> adj(static_cast<std::size_t>(n));
    std::vector<int> local(static_cast<std::size_t>(g.slot_count()), -1);
    for (int i = 0; i < n; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
    for (const Edge& e : g.edges()) {
        int a = local[static_cast<std::size_t>(e.u)];
        int b = local[static_cast<std::size_t>(e.v)];
        adj[static_cast<std::size_t>(a)].emplace_back(b, e.w);
        adj[static_cast<std::size_t>(b)].emplace_back(a, e.w);
    }
    std::vector<Weight> d(static_cast<std::size_t>(n));
    Weight value = 0;
    for (int i = 0; i < n; ++i) {
        d[static_cast<std::size_t>(i)] = vw.delta(verts[static_cast<std::size_t>(i)]);
        value += vw.w0[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])];
    }

    std::uint32_t mask = 0;
    Weight best_value = value;
    std::uint32_t best_mask = 0;
    const std::uint64_t total = n == 0 ? 1 : (std::uint64_t{1} << n);
    for (std::uint64_t it = 1; it < total; ++it) {
        int flip = std::countr_zero(it);
        std::uint32_t bit = std::uint32_t{1} << flip;
        bool entering = (mask & bit) == 0;
        for (auto [to, w] : adj[static_cast<std::size_t>(flip)]) {
            bool to_in = (mask & (std::uint32_t{1} << to)) != 0;
            if (to_in == !entering)
                value += w;
            else
                value -= w;
        }
        value += entering ? d[static_cast<std::size_t>(flip)] : -d[static_cast<std::size_t>(flip)];
        mask ^= bit;
        if (value > best_value ||
            (value == best_value && detail::mask_lex_less(mask, best_mask)))
            best_mask = mask, best_value = value;
    }
    std::vector<int> side1 = detail::mask_to_set(best_mask, verts);
    Weight cw = cut_weight(g, side1);
    return {best_value, Cut{std::move(side1), cw}};
}

/// Exact MaxCut-with-vertex-weights on a uniform-clique-forest, linear in
/// n + m. Peels leaf blocks, folding each block's optimum (for both
/// placements of its attachment vertex) into that vertex's bonuses, then
/// backtracks the recorded choices to materialize the cut.
inline UcfResult solve_ucf(const WeightedGraph& g, const VertexWeights& vw_in) {
    BlockCutForest bcf = block_cut_forest(g);
    for (const Block& b : bcf.blocks)
        if (!b.is_clique() || !b.is_uniform())
            throw NotUcfError("solve_ucf requires a uniform-clique-forest");

    std::vector<Weight> w0 = vw_in.w0;
    std::vector<Weight> w1 = vw_in.w1;
    for (int v : g.vertices())
        if (w0[static_cast<std::size_t>(v)] < 0 || w1[static_cast<std::size_t>(v)] < 0)
            throw BadParametersError("vertex weights must be nonnegative");

    const auto nblocks = bcf.blocks.size();
    std::vector<std::vector<int>> blocks_of(static_cast<std::size_t>(g.slot_count()));
    for (std::size_t b = 0; b < nblocks; ++b)
        for (int v : bcf.blocks[b].vertices) blocks_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));

    // Root each component's block tree and record a BFS order; peeling then
    // walks that order backwards (deepest blocks first).
    std::vector<char> seen(nblocks, false);
    std::vector<std::pair<int, int>> order;  // (block, attachment vertex)
    std::vector<std::pair<int, int>> queue;
    for (std::size_t root = 0; root < nblocks; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        queue.clear();
        // The root has no parent: -1 marks that every cut vertex descends.
        queue.emplace_back(static_cast<int>(root), -1);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [b, via] = queue[head];
            order.emplace_back(
                b, via == -1 ? bcf.blocks[static_cast<std::size_t>(b)].min_vertex() : via);
            for (int cv : bcf.block_cut_vertices(b)) {
                if (cv == via) continue;
                for (int b2 : blocks_of[static_cast<std::size_t>(cv)]) {
                    if (seen[static_cast<std::size_t>(b2)]) continue;
                    seen[static_cast<std::size_t>(b2)] = true;
                    queue.emplace_back(b2, cv);
                }
            }
        }
    }

    struct Peel {
        int v;
        std::vector<int> xs;  // by decreasing delta
        int best_p[2];
    };
    std::vector<Peel> peels;
    std::vector<char> peeled(static_cast<std::size_t>(g.slot_count()), false);

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Block& blk = bcf.blocks[static_cast<std::size_t>(it->first)];
        if (blk.edges.empty()) continue;  // singleton: handled at the top level
        int v = it->second;
        const Weight c = blk.edges.front().w;
        Peel rec;
        rec.v = v;
        for (int x : blk.vertices)
            if (x != v) rec.xs.push_back(x);
        std::sort(rec.xs.begin(), rec.xs.end(), [&](int a, int b) {
            Weight da = w1[static_cast<std::size_t>(a)] - w0[static_cast<std::size_t>(a)];
            Weight db = w1[static_cast<std::size_t>(b)] - w0[static_cast<std::size_t>(b)];
            return da != db ? da > db : a < b;
        });
        const Weight np = static_cast<Weight>(rec.xs.size());
        Weight bonus0 = 0;  // all of X outside the cut
        for (int x : rec.xs) bonus0 += w0[static_cast<std::size_t>(x)];
        Weight best_val[2];
        for (int s = 0; s < 2; ++s) {
            Weight bonus = bonus0;
            Weight best = c * s * (np + 1 - s) + bonus;
            int bp = 0;
            for (Weight p = 1; p <= np; ++p) {
                int x = rec.xs[static_cast<std::size_t>(p - 1)];
                bonus += w1[static_cast<std::size_t>(x)] - w0[static_cast<std::size_t>(x)];
                Weight in_side = p + s;
                Weight val = c * in_side * (np + 1 - in_side) + bonus;
                if (val > best) {
                    best = val;
                    bp = static_cast<int>(p);
                }
            }
            best_val[s] = best;
            rec.best_p[s] = bp;
        }
        w0[static_cast<std::size_t>(v)] += best_val[0];
        w1[static_cast<std::size_t>(v)] += best_val[1];
        for (int x : rec.xs) peeled[static_cast<std::size_t>(x)] = true;
        peels.push_back(std::move(rec));
    }

    // Top-level vertices keep whichever side pays more.
    std::vector<int> side(static_cast<std::size_t>(g.slot_count()), 0);
    Weight value = 0;
    for (int v : g.vertices()) {
        if (peeled[static_cast<std::size_t>(v)]) continue;
        if (w1[static_cast<std::size_t>(v)] > w0[static_cast<std::size_t>(v)]) {
            side[static_cast<std::size_t>(v)] = 1;
            value += w1[static_cast<std::size_t>(v)];
        } else {
            value += w0[static_cast<std::size_t>(v)];
        }
    }
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) {
        int p = it->best_p[side[static_cast<std::size_t>(it->v)]];
        for (int i = 0; i < static_cast<int>(it->xs.size()); ++i)
            side[static_cast<std::size_t>(it->xs[static_cast<std::size_t>(i)])] = i < p ? 1 : 0;
    }
    std::vector<int> side1;
    for (int v : g.vertices())
        if (side[static_cast<std::size_t>(v)] == 1) side1.push_back(v);
    Weight cw = cut_weight(g, side1);
    return {value, Cut{std::move(side1), cw}};
}

}  // namespace maxcut

#endif
