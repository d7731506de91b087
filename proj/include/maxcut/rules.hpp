#ifndef MAXCUT_RULES_HPP
#define MAXCUT_RULES_HPP

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

#include "maxcut/block_cut.hpp"
#include "maxcut/graph.hpp"

namespace maxcut {

// Witness payloads of the eight reduction rules. X always excludes the
// attachment vertex v.
struct Rule1 {
    int x, y, z;
};
struct Rule2 {
    std::vector<int> X;
    int v;
};
struct Rule3 {
    std::vector<int> X;
    int v;
};
struct Rule4 {
    std::vector<int> X;
    int v;
};
struct Rule5 {
    std::vector<int> X;
    int v, x, y;
    Weight c;
};
struct Rule6 {
    int a, b, c;
};
struct Rule7 {
    int v, a, b, c;
};
struct Rule8 {
    std::vector<int> X;
    int x, y, v;
    Weight c;
};

struct RuleInstance {
    std::variant<Rule1, Rule2, Rule3, Rule4, Rule5, Rule6, Rule7, Rule8> witness;

    int rule_id() const { return static_cast<int>(witness.index()) + 1; }
};

namespace detail {

/// Vertices of the connected component containing s, ascending.
inline std::vector<int> component_of(const WeightedGraph& g, int s) {
    std::vector<char> vis(static_cast<std::size_t>(g.slot_count()), false);
    std::vector<int> stack{s}, out;
    vis[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (const auto& [to, w] : g.neighbors(v)) {
            (void)w;
            if (!vis[static_cast<std::size_t>(to)]) {
                vis[static_cast<std::size_t>(to)] = true;
                stack.push_back(to);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff comp minus `removed` induces a connected (possibly empty)
/// subgraph of g. `comp` must be one connected component.
inline bool connected_without(const WeightedGraph& g, const std::vector<int>& comp,
                              const std::vector<int>& removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.slot_count()), false);
    for (int v : removed) gone[static_cast<std::size_t>(v)] = true;
    int start = -1;
    std::size_t expect = 0;
    for (int v : comp)
        if (!gone[static_cast<std::size_t>(v)]) {
            if (start == -1) start = v;
            ++expect;
        }
    if (start == -1) return true;
    std::vector<char> vis(static_cast<std::size_t>(g.slot_count()), false);
    std::vector<int> stack{start};
    vis[static_cast<std::size_t>(start)] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& [to, w] : g.neighbors(v)) {
            (void)w;
            if (!gone[static_cast<std::size_t>(to)] && !vis[static_cast<std::size_t>(to)]) {
                vis[static_cast<std::size_t>(to)] = true;
                ++count;
                stack.push_back(to);
            }
        }
    }
    return count == expect;
}

/// G[S] is a clique.
inline bool induced_clique(const WeightedGraph& g, const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

/// All edges of G[S] share one weight; returns that weight (0 if edgeless).
inline std::optional<Weight> induced_uniform_weight(const WeightedGraph& g,
                                                    const std::vector<int>& s) {
    Weight c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Weight w = g.weight_or_zero(s[i], s[j]);
            if (w == 0) continue;
            if (c == 0)
                c = w;
            else if (c != w)
                return std::nullopt;
        }
    return c;
}

/// Finds the block whose vertex set is exactly `vs` (sorted); requires it
/// to be a leaf and v to be its cut vertex (or any member if it has none).
inline bool is_leaf_block_with_v(const BlockCutForest& bcf, const std::vector<int>& vs,
                                 int v) {
    for (std::size_t b = 0; b < bcf.blocks.size(); ++b) {
        if (bcf.blocks[b].vertices != vs) continue;
        std::vector<int> cuts = bcf.block_cut_vertices(static_cast<int>(b));
        if (cuts.size() > 1) return false;
        if (cuts.size() == 1) return cuts[0] == v;
        return std::binary_search(vs.begin(), vs.end(), v);
    }
    return false;
}

inline std::vector<int> sorted_union(std::vector<int> a, int v) {
    a.push_back(v);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

}  // namespace detail

/// Checks the stated precondition of a rule instance, verbatim against the
/// rules table. Connectivity is evaluated on the connected component
/// containing the witnesses.
inline bool check_rule(const WeightedGraph& g, const RuleInstance& inst) {
    using namespace detail;
    return std::visit(
        [&](const auto& r) -> bool {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Rule1>) {
                if (r.x == r.y || r.y == r.z || r.x == r.z) return false;
                Weight wxy = g.weight_or_zero(r.x, r.y);
                Weight wyz = g.weight_or_zero(r.y, r.z);
                if (wxy == 0 || wyz == 0 || wxy <= wyz) return false;
                return connected_without(g, component_of(g, r.x), {r.x, r.y});
            } else if constexpr (std::is_same_v<T, Rule2>) {
                if (r.X.empty()) return false;
                std::vector<int> blockset = sorted_union(r.X, r.v);
                if (blockset.size() != r.X.size() + 1) return false;
                BlockCutForest bcf = block_cut_forest(g);
                if (!is_leaf_block_with_v(bcf, blockset, r.v)) return false;
                return induced_clique(g, blockset) &&
                       induced_uniform_weight(g, blockset).has_value();
            } else if constexpr (std::is_same_v<T, Rule3>) {
                if (r.X.empty()) return false;
                std::vector<int> blockset = sorted_union(r.X, r.v);
                if (blockset.size() != r.X.size() + 1) return false;
                BlockCutForest bcf = block_cut_forest(g);
                if (!is_leaf_block_with_v(bcf, blockset, r.v)) return false;
                if (!induced_clique(g, blockset)) return false;
                std::vector<int> xs = r.X;
                std::sort(xs.begin(), xs.end());
                return induced_uniform_weight(g, xs).has_value() &&
                       !induced_uniform_weight(g, blockset).has_value();
            } else if constexpr (std::is_same_v<T, Rule4>) {
                if (r.X.empty()) return false;
                std::vector<int> blockset = sorted_union(r.X, r.v);
                if (blockset.size() != r.X.size() + 1) return false;
                BlockCutForest bcf = block_cut_forest(g);
                if (!is_leaf_block_with_v(bcf, blockset, r.v)) return false;
                std::vector<int> xs = r.X;
                std::sort(xs.begin(), xs.end());
                int nbrs = 0;
                for (int x : xs)
                    if (g.has_edge(r.v, x)) ++nbrs;
                if (nbrs < 2) return false;
                if (!induced_clique(g, xs) || !induced_uniform_weight(g, xs))
                    return false;
                return !induced_clique(g, blockset);
            } else if constexpr (std::is_same_v<T, Rule5>) {
                if (r.X.size() < 2 || r.x == r.y) return false;
                std::vector<int> xs = r.X;
                std::sort(xs.begin(), xs.end());
                if (!std::binary_search(xs.begin(), xs.end(), r.x) ||
                    !std::binary_search(xs.begin(), xs.end(), r.y))
                    return false;
                std::vector<int> blockset = sorted_union(r.X, r.v);
                if (blockset.size() != r.X.size() + 1) return false;
                BlockCutForest bcf = block_cut_forest(g);
                if (!is_leaf_block_with_v(bcf, blockset, r.v)) return false;
                if (!induced_clique(g, xs)) return false;
                for (int x : xs) {
                    bool adj = g.has_edge(r.v, x);
                    bool is_xy = (x == r.x || x == r.y);
                    if (adj != is_xy) return false;
                }
                if (r.c < 1) return false;
                for (std::size_t i = 0; i < xs.size(); ++i)
                    for (std::size_t j = i + 1; j < xs.size(); ++j) {
                        Weight w = g.weight_or_zero(xs[i], xs[j]);
                        bool is_heavy = (std::min(r.x, r.y) == xs[i] &&
                                         std::max(r.x, r.y) == xs[j]);
                        if (is_heavy ? w <= r.c : w != r.c) return false;
                    }
                return g.weight_or_zero(r.v, r.x) >= r.c &&
                       g.weight_or_zero(r.v, r.y) >= r.c;
            } else if constexpr (std::is_same_v<T, Rule6>) {
                if (r.a == r.b || r.b == r.c || r.a == r.c) return false;
                Weight wab = g.weight_or_zero(r.a, r.b);
                Weight wbc = g.weight_or_zero(r.b, r.c);
                if (wab == 0 || wbc == 0 || wab != wbc) return false;
                if (g.has_edge(r.a, r.c)) return false;
                std::vector<int> comp = component_of(g, r.a);
                if (!connected_without(g, comp, {r.a, r.b, r.c})) return false;
                Weight mn = 0;
                for (int t : {r.a, r.b, r.c})
                    for (const auto& [to, w] : g.neighbors(t))
                        if (to != r.a && to != r.b && to != r.c)
                            mn = (mn == 0) ? w : std::min(mn, w);
                return mn != 0 && 2 * wab > mn;
            } else if constexpr (std::is_same_v<T, Rule7>) {
                std::vector<int> blockset{r.a, r.b, r.c, r.v};
                std::sort(blockset.begin(), blockset.end());
                if (std::unique(blockset.begin(), blockset.end()) != blockset.end())
                    return false;
                BlockCutForest bcf = block_cut_forest(g);
                if (!is_leaf_block_with_v(bcf, blockset, r.v)) return false;
                Weight wab = g.weight_or_zero(r.a, r.b);
                Weight wbc = g.weight_or_zero(r.b, r.c);
                if (wab == 0 || wbc == 0 || wab != wbc) return false;
                if (g.has_edge(r.a, r.c)) return false;
                if (g.weight_or_zero(r.a, r.v) < 2 * wab) return false;
                if (g.weight_or_zero(r.c, r.v) < 2 * wab) return false;
                Weight wbv = g.weight_or_zero(r.b, r.v);
                return wbv == 0 || wbv >= 2 * wab;
            } else {
                static_assert(std::is_same_v<T, Rule8>);
                if (r.X.empty() || r.x == r.y) return false;
                if (g.has_edge(r.x, r.y)) return false;
                std::vector<int> comp = component_of(g, r.x);
                if (!std::binary_search(comp.begin(), comp.end(), r.y)) return false;
                std::vector<int> xs = r.X;
                std::sort(xs.begin(), xs.end());
                // Components of the operated component minus {x,y}: exactly
                // two, one of them equal to X.
                std::vector<char> gone(static_cast<std::size_t>(g.slot_count()), false);
                gone[static_cast<std::size_t>(r.x)] = true;
                gone[static_cast<std::size_t>(r.y)] = true;
                std::vector<int> pieces_first;
                std::vector<std::vector<int>> pieces;
                std::vector<char> vis(static_cast<std::size_t>(g.slot_count()), false);
                for (int s : comp) {
                    if (gone[static_cast<std::size_t>(s)] || vis[static_cast<std::size_t>(s)])
                        continue;
                    std::vector<int> piece, stack{s};
                    vis[static_cast<std::size_t>(s)] = true;
                    while (!stack.empty()) {
                        int v2 = stack.back();
                        stack.pop_back();
                        piece.push_back(v2);
                        for (const auto& [to, w] : g.neighbors(v2)) {
                            (void)w;
                            if (!gone[static_cast<std::size_t>(to)] &&
                                !vis[static_cast<std::size_t>(to)]) {
                                vis[static_cast<std::size_t>(to)] = true;
                                stack.push_back(to);
                            }
                        }
                    }
                    std::sort(piece.begin(), piece.end());
                    pieces.push_back(std::move(piece));
                }
                if (pieces.size() != 2) return false;
                int xi = pieces[0] == xs ? 0 : (pieces[1] == xs ? 1 : -1);
                if (xi == -1) return false;
                const std::vector<int>& ys = pieces[static_cast<std::size_t>(1 - xi)];
                if (!std::binary_search(ys.begin(), ys.end(), r.v)) return false;
                if (r.c < 1) return false;
                for (int side : {r.x, r.y}) {
                    std::vector<int> cl = sorted_union(xs, side);
                    if (!induced_clique(g, cl)) return false;
                    auto u = induced_uniform_weight(g, cl);
                    if (!u || *u != r.c) return false;
                    // exactly one neighbor in Y, namely v
                    for (const auto& [to, w] : g.neighbors(side)) {
                        (void)w;
                        if (std::binary_search(ys.begin(), ys.end(), to) && to != r.v)
                            return false;
                    }
                    if (!g.has_edge(side, r.v)) return false;
                }
                return true;
            }
        },
        inst.witness);
}

/// One applied reduction with everything needed to undo it into a cut:
/// the removed vertices, the marked vertices, and every incident edge.
struct ReductionStep {
    RuleInstance instance;
    std::vector<int> removed;  // ascending
    std::vector<int> marked;   // ascending
    int k_delta_quarters = 1;
    std::vector<Edge> payload;  // edges with >= 1 removed endpoint
};

inline std::vector<int> rule_removed_set(const RuleInstance& inst) {
    return std::visit(
        [](const auto& r) -> std::vector<int> {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Rule1>) {
                return {std::min(r.x, r.y), std::max(r.x, r.y)};
            } else if constexpr (std::is_same_v<T, Rule6>) {
                std::vector<int> s{r.a, r.b, r.c};
                std::sort(s.begin(), s.end());
                return s;
            } else if constexpr (std::is_same_v<T, Rule7>) {
                std::vector<int> s{r.a, r.b, r.c};
                std::sort(s.begin(), s.end());
                return s;
            } else if constexpr (std::is_same_v<T, Rule8>) {
                std::vector<int> s = r.X;
                s.push_back(r.x);
                s.push_back(r.y);
                std::sort(s.begin(), s.end());
                return s;
            } else {
                std::vector<int> s = r.X;
                std::sort(s.begin(), s.end());
                return s;
            }
        },
        inst.witness);
}

inline std::vector<int> rule_marked_set(const RuleInstance& inst) {
    return std::visit(
        [](const auto& r) -> std::vector<int> {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Rule1>) {
                return {std::min(r.x, r.y), std::max(r.x, r.y)};
            } else if constexpr (std::is_same_v<T, Rule2>) {
                return {};
            } else if constexpr (std::is_same_v<T, Rule3> || std::is_same_v<T, Rule4>) {
                return {r.v};
            } else if constexpr (std::is_same_v<T, Rule5>) {
                std::vector<int> s{r.v, r.x, r.y};
                std::sort(s.begin(), s.end());
                return s;
            } else if constexpr (std::is_same_v<T, Rule6> || std::is_same_v<T, Rule7>) {
                std::vector<int> s{r.a, r.b, r.c};
                std::sort(s.begin(), s.end());
                return s;
            } else {
                static_assert(std::is_same_v<T, Rule8>);
                return {std::min(r.x, r.y), std::max(r.x, r.y)};
            }
        },
        inst.witness);
}

struct ApplyResult {
    WeightedGraph reduced;
    ReductionStep step;
    Weight k_quarters;
};

/// Applies a checked rule: removes the rule's Remove set, records the step
/// (with its extension payload) and decrements k by one quarter for every
/// rule except Rule 2 -- each paid step buys one quarter of cut surplus.
inline ApplyResult apply_rule(const WeightedGraph& g, const RuleInstance& inst,
                              Weight k_quarters) {
    if (!check_rule(g, inst))
        throw PreconditionError("rule " + std::to_string(inst.rule_id()) +
                                " precondition does not hold");
    ReductionStep step;
    step.instance = inst;
    step.removed = rule_removed_set(inst);
    step.marked = rule_marked_set(inst);
    step.k_delta_quarters = inst.rule_id() == 2 ? 0 : 1;
    std::vector<char> gone(static_cast<std::size_t>(g.slot_count()), false);
    for (int v : step.removed) gone[static_cast<std::size_t>(v)] = true;
    for (const Edge& e : g.edges())
        if (gone[static_cast<std::size_t>(e.u)] || gone[static_cast<std::size_t>(e.v)])
            step.payload.push_back(e);
    WeightedGraph reduced = g.without(step.removed);
    Weight k2 = k_quarters - step.k_delta_quarters;
    return {std::move(reduced), std::move(step), k2};
}

}  // namespace maxcut

#endif
