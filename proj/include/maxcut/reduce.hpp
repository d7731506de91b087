#ifndef MAXCUT_REDUCE_HPP
#define MAXCUT_REDUCE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "maxcut/block_cut.hpp"
#include "maxcut/graph.hpp"
#include "maxcut/rules.hpp"
#include "maxcut/select.hpp"

namespace maxcut {

enum class ReduceMode {
    kDecide,  // stop as soon as the parameter budget is exhausted
    kFull,    // reduce until the graph has no edges
};

struct ReductionOutcome {
    std::vector<ReductionStep> trace;
    std::vector<int> marked;  // union of per-step marks, ascending
    Weight k_remaining_quarters = 0;
    bool stopped_early = false;  // decide mode ran out of budget with edges left
    WeightedGraph residual;
};

namespace detail {

/// Incremental reduction driver. Keeps a mutable adjacency plus the
/// block-cut state of every component; Rule 2 steps update that state
/// locally, every other rule triggers a recompute of its component.
class Reducer {
public:
    Reducer(const WeightedGraph& g, Weight k_quarters, ReduceMode mode)
        : input_(g), mode_(mode), k_(k_quarters) {
        const int n = g.slot_count();
        adj_.resize(static_cast<std::size_t>(n));
        alive_.assign(static_cast<std::size_t>(n), false);
        for (int v : g.vertices()) alive_[static_cast<std::size_t>(v)] = true;
        for (const Edge& e : g.edges()) {
            adj_[static_cast<std::size_t>(e.u)][e.v] = e.w;
            adj_[static_cast<std::size_t>(e.v)][e.u] = e.w;
        }
        auto [comp, ncomp] = g.components();
        comp_ = std::move(comp);
        comp_rep_.assign(static_cast<std::size_t>(ncomp), -1);
        comp_blocks_.resize(static_cast<std::size_t>(ncomp));
        for (int v : g.vertices()) {
            auto c = static_cast<std::size_t>(comp_[static_cast<std::size_t>(v)]);
            if (comp_rep_[c] == -1) comp_rep_[c] = v;
        }
        block_count_.assign(static_cast<std::size_t>(n), 0);
        blocks_of_.resize(static_cast<std::size_t>(n));
        import_blocks(block_cut_forest(g));
    }

    ReductionOutcome run() {
        ReductionOutcome out;
        std::vector<int> removed_all;
        while (!leafset_.empty()) {
            if (mode_ == ReduceMode::kDecide && k_ <= 0) {
                out.stopped_early = true;
                break;
            }
            int b = leafset_.begin()->second;
            const Block& blk = blocks_[static_cast<std::size_t>(b)];
            int v = attachment_of(b);
            ReductionStep step;
            if (blk.is_clique() && blk.is_uniform()) {
                step = apply_rule2(b, v);
            } else {
                step = apply_other(b, v);
            }
            k_ -= step.k_delta_quarters;
            for (int u : step.marked) out.marked.push_back(u);
            for (int u : step.removed) removed_all.push_back(u);
            out.trace.push_back(std::move(step));
        }
        std::sort(out.marked.begin(), out.marked.end());
        out.marked.erase(std::unique(out.marked.begin(), out.marked.end()),
                         out.marked.end());
        out.k_remaining_quarters = k_;
        out.residual = input_.without(removed_all);
        return out;
    }

private:
    int attachment_of(int b) const {
        const Block& blk = blocks_[static_cast<std::size_t>(b)];
        for (int u : blk.vertices)
            if (block_count_[static_cast<std::size_t>(u)] >= 2) return u;
        return blk.min_vertex();
    }

    void import_blocks(const BlockCutForest& bcf) {
        for (const Block& blk : bcf.blocks) {
            if (blk.edges.empty()) continue;  // singletons carry no reduction work
            int id = static_cast<int>(blocks_.size());
            for (int u : blk.vertices) {
                ++block_count_[static_cast<std::size_t>(u)];
                blocks_of_[static_cast<std::size_t>(u)].push_back(id);
            }
            comp_blocks_[static_cast<std::size_t>(
                             comp_[static_cast<std::size_t>(blk.min_vertex())])]
                .push_back(id);
            blocks_.push_back(blk);
            block_live_.push_back(true);
        }
        refresh_leafset_all();
    }

    int block_cut_count(int b) const {
        int cuts = 0;
        for (int u : blocks_[static_cast<std::size_t>(b)].vertices)
            if (block_count_[static_cast<std::size_t>(u)] >= 2) ++cuts;
        return cuts;
    }

    void refresh_leafset_all() {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (block_live_[b] && block_cut_count(static_cast<int>(b)) <= 1)
                leafset_.insert({blocks_[b].min_vertex(), static_cast<int>(b)});
    }

    /// Uniform-clique leaf block: drop X, keep v, no mark, no k change.
    /// The block-cut state changes only at v.
    ReductionStep apply_rule2(int b, int v) {
        const Block& blk = blocks_[static_cast<std::size_t>(b)];
        ReductionStep step;
        std::vector<int> xs;
        for (int u : blk.vertices)
            if (u != v) xs.push_back(u);
        step.instance = RuleInstance{Rule2{xs, v}};
        step.removed = xs;
        step.k_delta_quarters = 0;
        step.payload = blk.edges;
        erase_vertices(xs);
        // v always survives Rule 2, so it can anchor later traversals.
        comp_rep_[static_cast<std::size_t>(comp_[static_cast<std::size_t>(v)])] = v;

        leafset_.erase({blk.min_vertex(), b});
        block_live_[static_cast<std::size_t>(b)] = false;
        int& vc = block_count_[static_cast<std::size_t>(v)];
        --vc;
        if (vc == 1) {
            // v stopped being a cut vertex; its remaining block may have
            // turned into a leaf.
            for (int b2 : blocks_of_[static_cast<std::size_t>(v)]) {
                if (!block_live_[static_cast<std::size_t>(b2)]) continue;
                if (block_cut_count(b2) <= 1)
                    leafset_.insert({blocks_[static_cast<std::size_t>(b2)].min_vertex(), b2});
            }
        }
        return step;
    }

    /// Any other rule: materialize the component, run the selector, apply
    /// the instance, and rebuild the component's block-cut state.
    ReductionStep apply_other(int b, int v) {
        const Block& blk = blocks_[static_cast<std::size_t>(b)];
        int cid = comp_[static_cast<std::size_t>(blk.min_vertex())];
        WeightedGraph cg = component_graph(cid);
        RuleInstance inst = select_rule(cg, blk.vertices, v);

        ReductionStep step;
        step.instance = inst;
        step.removed = rule_removed_set(inst);
        step.marked = rule_marked_set(inst);
        step.k_delta_quarters = 1;
        std::vector<char> gone(static_cast<std::size_t>(input_.slot_count()), false);
        for (int u : step.removed) gone[static_cast<std::size_t>(u)] = true;
        for (int u : step.removed)
            for (const auto& [t, w] : adj_[static_cast<std::size_t>(u)])
                if (!gone[static_cast<std::size_t>(t)] || t > u)
                    step.payload.push_back({std::min(u, t), std::max(u, t), w});
        std::sort(step.payload.begin(), step.payload.end(),
                  [](const Edge& a, const Edge& c) {
                      return std::tie(a.u, a.v) < std::tie(c.u, c.v);
                  });
        erase_vertices(step.removed);

        for (int old : comp_blocks_[static_cast<std::size_t>(cid)]) {
            if (!block_live_[static_cast<std::size_t>(old)]) continue;
            block_live_[static_cast<std::size_t>(old)] = false;
            leafset_.erase({blocks_[static_cast<std::size_t>(old)].min_vertex(), old});
        }
        comp_blocks_[static_cast<std::size_t>(cid)].clear();
        WeightedGraph after = cg.without(step.removed);
        for (int u : after.vertices()) {
            block_count_[static_cast<std::size_t>(u)] = 0;
            blocks_of_[static_cast<std::size_t>(u)].clear();
        }
        comp_rep_[static_cast<std::size_t>(cid)] =
            after.vertex_count() > 0 ? after.vertices().front() : -1;
        BlockCutForest bcf = block_cut_forest(after);
        for (const Block& nb : bcf.blocks) {
            if (nb.edges.empty()) continue;
            int id = static_cast<int>(blocks_.size());
            for (int u : nb.vertices) {
                ++block_count_[static_cast<std::size_t>(u)];
                blocks_of_[static_cast<std::size_t>(u)].push_back(id);
            }
            comp_blocks_[static_cast<std::size_t>(cid)].push_back(id);
            blocks_.push_back(nb);
            block_live_.push_back(true);
        }
        for (int id : comp_blocks_[static_cast<std::size_t>(cid)])
            if (block_cut_count(id) <= 1)
                leafset_.insert({blocks_[static_cast<std::size_t>(id)].min_vertex(), id});
        return step;
    }

    void erase_vertices(const std::vector<int>& removed) {
        for (int u : removed) {
            for (const auto& [t, w] : adj_[static_cast<std::size_t>(u)]) {
                (void)w;
                adj_[static_cast<std::size_t>(t)].erase(u);
            }
            adj_[static_cast<std::size_t>(u)].clear();
            alive_[static_cast<std::size_t>(u)] = false;
        }
    }

    WeightedGraph component_graph(int cid) const {
        int rep = comp_rep_[static_cast<std::size_t>(cid)];
        std::vector<int> verts;
        std::vector<RawEdge> edges;
        std::vector<char> vis(static_cast<std::size_t>(input_.slot_count()), false);
        std::vector<int> stack{rep};
        vis[static_cast<std::size_t>(rep)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (const auto& [t, w] : adj_[static_cast<std::size_t>(u)]) {
                if (u < t) edges.push_back({u, t, w});
                if (!vis[static_cast<std::size_t>(t)]) {
                    vis[static_cast<std::size_t>(t)] = true;
                    stack.push_back(t);
                }
            }
        }
        WeightedGraph full = WeightedGraph::from_edges(input_.slot_count(), edges);
        return full.induced(verts);
    }

    const WeightedGraph& input_;
    ReduceMode mode_;
    Weight k_;
    std::vector<std::map<int, Weight>> adj_;
    std::vector<char> alive_;
    std::vector<int> comp_;
    std::vector<int> comp_rep_;
    std::vector<std::vector<int>> comp_blocks_;
    std::vector<Block> blocks_;
    std::vector<char> block_live_;
    std::vector<int> block_count_;
    std::vector<std::vector<int>> blocks_of_;
    std::set<std::pair<int, int>> leafset_;  // (min vertex id, block id)
};

}  // namespace detail

/// Applies reduction rules exhaustively (kFull) or until the quarter budget
/// is spent (kDecide). The chosen block is always the leaf block with the
/// smallest vertex id, so traces are deterministic.
inline ReductionOutcome reduce(const WeightedGraph& g, Weight k_quarters,
                               ReduceMode mode) {
    return detail::Reducer(g, k_quarters, mode).run();
}

}  // namespace maxcut

#endif
