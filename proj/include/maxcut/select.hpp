#ifndef MAXCUT_SELECT_HPP
#define MAXCUT_SELECT_HPP

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "maxcut/block_cut.hpp"
#include "maxcut/graph.hpp"
#include "maxcut/rules.hpp"

namespace maxcut {

/// Structural shape of a leaf block. Exactly one applies; they are tested
/// in order, so e.g. kClique beats kTriple even when both would hold.
enum class LeafShape {
    kClique,        // G[X u {v}] is a clique
    kInnerClique,   // G[X] is a clique, the block is not
    kTwoNeighbors,  // v has exactly two non-adjacent neighbors x, y in X
                    // and X - x, X - y are cliques
    kTriple,        // vertices a, b, c with ab, bc edges, ac a non-edge,
                    // removal keeps the component connected
};

struct Classification {
    LeafShape shape;
    int x = -1, y = -1;     // kTwoNeighbors witnesses
    int a = -1, b = -1, c = -1;  // kTriple witnesses
};

namespace detail {

/// First vertex in S (ascending) with two incident edges inside S of
/// different weights; returns (heaviest partner, center, lightest partner).
inline std::optional<std::tuple<int, int, int>> unbalanced_center(
    const WeightedGraph& g, const std::vector<int>& s) {
    for (int p : s) {
        int heavy = -1, light = -1;
        Weight hi = 0, lo = 0;
        for (const auto& [to, w] : g.neighbors(p)) {
            if (!std::binary_search(s.begin(), s.end(), to)) continue;
            if (heavy == -1 || w > hi) heavy = to, hi = w;
            if (light == -1 || w < lo) light = to, lo = w;
        }
        if (heavy != -1 && hi > lo) return std::tuple{heavy, p, light};
    }
    return std::nullopt;
}

/// Neighbors of v inside the sorted set S, ascending.
inline std::vector<int> neighbors_in(const WeightedGraph& g, int v,
                                     const std::vector<int>& s) {
    std::vector<int> out;
    for (const auto& [to, w] : g.neighbors(v)) {
        (void)w;
        if (std::binary_search(s.begin(), s.end(), to)) out.push_back(to);
    }
    return out;
}

/// Searches the block for a path a-b-c with ac absent whose removal keeps
/// the component connected. Candidates are scanned in ascending order of
/// the center, so the result is deterministic.
inline std::optional<std::tuple<int, int, int>> find_triple(
    const WeightedGraph& g, const std::vector<int>& block,
    const std::vector<int>& comp) {
    for (int b : block) {
        std::vector<int> nb = neighbors_in(g, b, block);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], c = nb[j];
                if (g.has_edge(a, c)) continue;
                if (connected_without(g, comp, {a, b, c})) return std::tuple{a, b, c};
            }
    }
    return std::nullopt;
}

}  // namespace detail

/// Classifies a leaf block X u {v} into one of the four shapes; the shapes
/// are exhaustive for leaf blocks of a connected graph with an edge.
/// `block` must be sorted ascending and contain v.
inline Classification classify_leaf_block(const WeightedGraph& g,
                                          const std::vector<int>& block, int v) {
    if (block.size() < 2 || !std::binary_search(block.begin(), block.end(), v))
        throw NotALeafBlockError("classify_leaf_block: v must lie in a block with an edge");
    std::vector<int> xs;
    for (int u : block)
        if (u != v) xs.push_back(u);

    if (detail::induced_clique(g, block)) return {LeafShape::kClique};
    if (detail::induced_clique(g, xs)) return {LeafShape::kInnerClique};

    std::vector<int> vnb = detail::neighbors_in(g, v, xs);
    if (vnb.size() == 2 && !g.has_edge(vnb[0], vnb[1])) {
        std::vector<int> wo_x, wo_y;
        for (int u : xs) {
            if (u != vnb[0]) wo_x.push_back(u);
            if (u != vnb[1]) wo_y.push_back(u);
        }
        if (detail::induced_clique(g, wo_x) && detail::induced_clique(g, wo_y)) {
            Classification r{LeafShape::kTwoNeighbors};
            r.x = vnb[0];
            r.y = vnb[1];
            return r;
        }
    }

    std::vector<int> comp = detail::component_of(g, v);
    auto t = detail::find_triple(g, block, comp);
    if (!t) throw SelectionFailedError("no applicable shape found for leaf block");
    Classification r{LeafShape::kTriple};
    std::tie(r.a, r.b, r.c) = *t;
    return r;
}

/// Tries every instantiation of every rule in a fixed deterministic order
/// and returns the first one whose precondition holds. Quadratic and worse;
/// a last-resort fallback and a test oracle for the fast selector.
inline std::optional<RuleInstance> select_rule_exhaustive(const WeightedGraph& g) {
    BlockCutForest bcf = block_cut_forest(g);
    auto leaf_candidates = [&](auto&& fn) {
        for (int b : bcf.leaf_blocks) {
            const Block& blk = bcf.blocks[static_cast<std::size_t>(b)];
            if (blk.edges.empty()) continue;
            std::vector<int> cuts = bcf.block_cut_vertices(b);
            if (cuts.size() == 1) {
                if (fn(blk, cuts[0])) return true;
            } else {
                for (int v : blk.vertices)
                    if (fn(blk, v)) return true;
            }
        }
        return false;
    };

    std::optional<RuleInstance> found;
    auto try_inst = [&](RuleInstance inst) {
        if (check_rule(g, inst)) {
            found = std::move(inst);
            return true;
        }
        return false;
    };

    // Rule 1: centers ascending, then (light, heavy) partners.
    for (int y : g.vertices()) {
        const auto& nb = g.neighbors(y);
        for (const auto& [x, wxy] : nb)
            for (const auto& [z, wyz] : nb)
                if (wxy > wyz && try_inst({Rule1{x, y, z}})) return found;
    }
    // Rules 2-5 on leaf blocks.
    if (leaf_candidates([&](const Block& blk, int v) {
            std::vector<int> xs;
            for (int u : blk.vertices)
                if (u != v) xs.push_back(u);
            if (try_inst({Rule2{xs, v}})) return true;
            if (try_inst({Rule3{xs, v}})) return true;
            if (try_inst({Rule4{xs, v}})) return true;
            std::vector<int> vnb = detail::neighbors_in(g, v, xs);
            if (vnb.size() == 2) {
                Weight c = 0;
                for (std::size_t i = 0; i < xs.size(); ++i)
                    for (std::size_t j = i + 1; j < xs.size(); ++j) {
                        Weight w = g.weight_or_zero(xs[i], xs[j]);
                        if (w > 0 && (c == 0 || w < c)) c = w;
                    }
                if (c > 0 && try_inst({Rule5{xs, v, vnb[0], vnb[1], c}})) return true;
            }
            return false;
        }))
        return found;
    // Rule 6: centers ascending.
    for (int b : g.vertices()) {
        const auto& nb = g.neighbors(b);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (try_inst({Rule6{nb[i].first, b, nb[j].first}})) return found;
    }
    // Rule 7: four-vertex leaf blocks, every center assignment.
    if (leaf_candidates([&](const Block& blk, int v) {
            if (blk.vertices.size() != 4) return false;
            std::vector<int> xs;
            for (int u : blk.vertices)
                if (u != v) xs.push_back(u);
            for (int bi = 0; bi < 3; ++bi) {
                std::vector<int> ac;
                for (int i = 0; i < 3; ++i)
                    if (i != bi) ac.push_back(xs[static_cast<std::size_t>(i)]);
                if (try_inst({Rule7{v, ac[0], xs[static_cast<std::size_t>(bi)], ac[1]}}))
                    return true;
            }
            return false;
        }))
        return found;
    // Rule 8: non-adjacent pairs ascending; each split piece as X.
    for (int x : g.vertices()) {
        std::vector<int> comp = detail::component_of(g, x);
        for (int y : comp) {
            if (y <= x || g.has_edge(x, y)) continue;
            WeightedGraph h = g.without({x, y});
            std::vector<char> used(static_cast<std::size_t>(g.slot_count()), false);
            for (int probe : comp) {
                if (probe == x || probe == y || used[static_cast<std::size_t>(probe)])
                    continue;
                std::vector<int> piece = detail::component_of(h, probe);
                for (int u : piece) used[static_cast<std::size_t>(u)] = true;
                Weight c = 0;
                for (std::size_t i = 0; i < piece.size() && c == 0; ++i)
                    c = g.weight_or_zero(x, piece[i]);
                if (c == 0) continue;
                int v = -1;
                for (const auto& [to, w] : g.neighbors(x)) {
                    (void)w;
                    if (to != y && !std::binary_search(piece.begin(), piece.end(), to)) {
                        v = to;
                        break;
                    }
                }
                if (v == -1) continue;
                if (try_inst({Rule8{piece, x, y, v, c}})) return found;
            }
        }
    }
    return std::nullopt;
}

/// Picks the rule to apply at a given leaf block, following the case
/// analysis that guarantees one of the eight rules always fits. Deterministic
/// for a fixed (graph, block, v).
inline RuleInstance select_rule(const WeightedGraph& g, const std::vector<int>& block,
                                int v) {
    using detail::neighbors_in;
    Classification cls = classify_leaf_block(g, block, v);
    std::vector<int> xs;
    for (int u : block)
        if (u != v) xs.push_back(u);

    switch (cls.shape) {
        case LeafShape::kClique: {
            if (detail::induced_uniform_weight(g, block)) return {Rule2{xs, v}};
            if (detail::induced_uniform_weight(g, xs)) return {Rule3{xs, v}};
            auto w = detail::unbalanced_center(g, xs);
            auto [heavy, center, light] = *w;
            return {Rule1{heavy, center, light}};
        }
        case LeafShape::kInnerClique: {
            if (detail::induced_uniform_weight(g, xs)) return {Rule4{xs, v}};
            std::vector<int> vnb = neighbors_in(g, v, xs);
            if (vnb.size() >= 3) {
                auto w = detail::unbalanced_center(g, xs);
                auto [heavy, center, light] = *w;
                return {Rule1{heavy, center, light}};
            }
            // v sees exactly two vertices of X. Rule 5 fits when the only
            // overweight edge of G[X] is exactly the one between them.
            int x = vnb[0], y = vnb[1];
            Weight cmin = 0;
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j) {
                    Weight w = g.weight_or_zero(xs[i], xs[j]);
                    if (cmin == 0 || w < cmin) cmin = w;
                }
            int heavies = 0;
            bool heavy_is_xy = false;
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j)
                    if (g.weight_or_zero(xs[i], xs[j]) > cmin) {
                        ++heavies;
                        heavy_is_xy = (xs[i] == std::min(x, y) && xs[j] == std::max(x, y));
                    }
            if (heavies == 1 && heavy_is_xy && g.weight_or_zero(v, x) >= cmin &&
                g.weight_or_zero(v, y) >= cmin)
                return {Rule5{xs, v, x, y, cmin}};
            // Otherwise some pair other than {x,y} is heavier than an edge
            // next to it (possibly the edge to v), and removal keeps the
            // graph connected.
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = i + 1; j < xs.size(); ++j) {
                    int a = xs[i], b = xs[j];
                    if ((a == std::min(x, y) && b == std::max(x, y))) continue;
                    Weight wab = g.weight_or_zero(a, b);
                    for (int e : {a, b}) {
                        int best = -1;
                        for (const auto& [u, w] : g.neighbors(e)) {
                            bool inside = std::binary_search(block.begin(), block.end(), u);
                            if (inside && u != e && w < wab && (best == -1 || u < best))
                                best = u;
                        }
                        if (best != -1)
                            return {Rule1{e == a ? b : a, e, best}};
                    }
                }
            throw SelectionFailedError("no rule 1 witness next to a rule 5 near-miss");
        }
        case LeafShape::kTwoNeighbors: {
            if (auto w = detail::unbalanced_center(g, xs)) {
                auto [heavy, center, light] = *w;
                return {Rule1{heavy, center, light}};
            }
            std::vector<int> x8;
            for (int u : xs)
                if (u != cls.x && u != cls.y) x8.push_back(u);
            Weight c = 0;
            for (int u : x8) {
                c = g.weight_or_zero(cls.x, u);
                break;
            }
            return {Rule8{x8, cls.x, cls.y, v, c}};
        }
        case LeafShape::kTriple: {
            int a = cls.a, b = cls.b, c = cls.c;
            Weight wab = g.weight_or_zero(a, b);
            Weight wbc = g.weight_or_zero(b, c);
            if (wab != wbc)
                return wab > wbc ? RuleInstance{Rule1{a, b, c}}
                                 : RuleInstance{Rule1{c, b, a}};
            Weight mn = 0;
            for (int t : {a, b, c})
                for (const auto& [to, w] : g.neighbors(t))
                    if (to != a && to != b && to != c) mn = mn == 0 ? w : std::min(mn, w);
            if (mn != 0 && 2 * wab > mn) return {Rule6{a, b, c}};
            // Every boundary edge now weighs at least 2*w(a,b). Removing a
            // boundary pair that keeps the component connected feeds Rule 1.
            std::vector<int> comp = detail::component_of(g, a);
            for (int u : {a, b, c})
                for (const auto& [z, w] : g.neighbors(u)) {
                    (void)w;
                    if (z == a || z == b || z == c) continue;
                    if (detail::connected_without(g, comp, {u, z}))
                        return {Rule1{z, u, u == b ? a : b}};
                }
            // Dead end: the triple's whole neighborhood is one vertex and
            // {a,b,c,v} is a leaf block.
            std::vector<int> outside;
            for (int u : {a, b, c})
                for (const auto& [z, w] : g.neighbors(u)) {
                    (void)w;
                    if (z != a && z != b && z != c) outside.push_back(z);
                }
            std::sort(outside.begin(), outside.end());
            outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
            if (outside.size() == 1) {
                RuleInstance inst{Rule7{outside[0], a, b, c}};
                if (check_rule(g, inst)) return inst;
            }
            if (auto ex = select_rule_exhaustive(g)) return *ex;
            throw SelectionFailedError("no rule applies at the chosen leaf block");
        }
    }
    throw SelectionFailedError("unreachable");
}

/// Selects the leaf block with the smallest minimum vertex id among blocks
/// that still have an edge, then runs the case analysis there.
inline RuleInstance select_rule(const WeightedGraph& g) {
    if (g.edge_count() == 0) throw NoEdgesError("select_rule needs at least one edge");
    BlockCutForest bcf = block_cut_forest(g);
    int best = -1;
    for (int b : bcf.leaf_blocks) {
        const Block& blk = bcf.blocks[static_cast<std::size_t>(b)];
        if (blk.edges.empty()) continue;
        if (best == -1 ||
            blk.min_vertex() < bcf.blocks[static_cast<std::size_t>(best)].min_vertex())
            best = b;
    }
    const Block& blk = bcf.blocks[static_cast<std::size_t>(best)];
    std::vector<int> cuts = bcf.block_cut_vertices(best);
    int v = cuts.size() == 1 ? cuts[0] : blk.min_vertex();
    return select_rule(g, blk.vertices, v);
}

}  // namespace maxcut

#endif
