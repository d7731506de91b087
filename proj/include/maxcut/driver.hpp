#ifndef MAXCUT_DRIVER_HPP
#define MAXCUT_DRIVER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "maxcut/bounds.hpp"
#include "maxcut/graph.hpp"
#include "maxcut/reconstruct.hpp"
#include "maxcut/reduce.hpp"
#include "maxcut/ucf.hpp"

namespace maxcut {

/// How an answer was reached.
enum class DecisionPath {
    kBoundImplied,     // target at or below the Poljak-Turzik bound
    kBudgetExhausted,  // the reduction spent the whole quarter budget
    kEnumerated,       // solved via subsets of the marked set
};

struct DecideResult {
    bool yes = false;
    Weight target_quarters = 0;
    DecisionPath path = DecisionPath::kBoundImplied;
};

struct SolveResult {
    bool yes = false;
    Weight target_quarters = 0;
    DecisionPath path = DecisionPath::kBoundImplied;
    Cut cut;            // meets the target when yes; best found otherwise
    bool cut_is_maximum = false;
};

namespace detail {

inline constexpr int kMaxMarkedForEnumeration = 30;

struct SubsetInstance {
    VertexWeights vw;
    Weight base = 0;  // weight between the two sides of the marked set
};

}  // namespace detail

/// Vertex-weight instance for one placement of the marked vertices: S1 goes
/// to side 1, the rest of S to side 0. A free vertex on side 0 cuts its
/// edges into S1, one on side 1 cuts its edges into S minus S1.
inline detail::SubsetInstance combine_subset(const WeightedGraph& g,
                                             const std::vector<int>& s,
                                             const std::vector<int>& s1) {
    for (int v : s1)
        if (!std::binary_search(s.begin(), s.end(), v))
            throw SubsetNotContainedError("subset vertex not in marked set");
    detail::SubsetInstance inst;
    inst.vw = VertexWeights::zeros(g.slot_count());
    std::vector<signed char> tag(static_cast<std::size_t>(g.slot_count()), -1);
    for (int v : s) tag[static_cast<std::size_t>(v)] = 0;
    for (int v : s1) tag[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : g.edges()) {
        signed char tu = tag[static_cast<std::size_t>(e.u)];
        signed char tv = tag[static_cast<std::size_t>(e.v)];
        if (tu != -1 && tv != -1) {
            if (tu != tv) inst.base += e.w;
        } else if (tu != -1) {
            (tu == 1 ? inst.vw.w0 : inst.vw.w1)[static_cast<std::size_t>(e.v)] += e.w;
        } else if (tv != -1) {
            (tv == 1 ? inst.vw.w0 : inst.vw.w1)[static_cast<std::size_t>(e.u)] += e.w;
        }
    }
    return inst;
}

namespace detail {

struct EnumerationResult {
    Weight best_value = 0;
    Cut best_cut;
};

/// Maximum cut over all placements of the marked set: for each subset, the
/// remaining uniform-clique-forest is solved exactly with vertex weights.
inline EnumerationResult enumerate_marked(const WeightedGraph& g,
                                          const std::vector<int>& s,
                                          std::optional<Weight> stop_at_quarters) {
    if (s.size() > static_cast<std::size_t>(kMaxMarkedForEnumeration))
        throw TooLargeError("marked set too large to enumerate");
    WeightedGraph rest = g.without(s);
    EnumerationResult out;
    out.best_value = -1;
    const std::uint64_t total = std::uint64_t{1} << s.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<int> s1;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (bits & (std::uint64_t{1} << i)) s1.push_back(s[i]);
        SubsetInstance inst = combine_subset(g, s, s1);
        UcfResult r = solve_ucf(rest, inst.vw);
        Weight value = inst.base + r.value;
        if (value > out.best_value) {
            std::vector<int> side1 = r.cut.side1;
            side1.insert(side1.end(), s1.begin(), s1.end());
            out.best_value = value;
            out.best_cut = make_cut(g, std::move(side1));
        }
        if (stop_at_quarters && 4 * out.best_value >= *stop_at_quarters) break;
    }
    return out;
}

}  // namespace detail

/// Decides whether G has a cut of weight at least PT(G) + k/4, where k is
/// given in quarter units.
inline DecideResult decide(const WeightedGraph& g, Weight k_quarters) {
    DecideResult res;
    res.target_quarters = poljak_turzik_quarters(g).quarters + k_quarters;
    if (k_quarters <= 0) {
        res.yes = true;
        res.path = DecisionPath::kBoundImplied;
        return res;
    }
    ReductionOutcome red = reduce(g, k_quarters, ReduceMode::kDecide);
    if (red.stopped_early) {
        res.yes = true;
        res.path = DecisionPath::kBudgetExhausted;
        return res;
    }
    detail::EnumerationResult best =
        detail::enumerate_marked(g, red.marked, res.target_quarters);
    res.yes = 4 * best.best_value >= res.target_quarters;
    res.path = DecisionPath::kEnumerated;
    return res;
}

/// Convenience wrapper taking a whole-unit excess k (quarters = 4k).
inline DecideResult decide_k(const WeightedGraph& g, Weight k) {
    return decide(g, 4 * k);
}

/// Same question for an absolute target, given in quarter units.
inline DecideResult decide_target(const WeightedGraph& g, Weight target_quarters) {
    return decide(g, target_quarters - poljak_turzik_quarters(g).quarters);
}

/// Decides and also produces a cut: a witness of the target when the answer
/// is yes, otherwise a maximum cut (which proves the no).
inline SolveResult solve(const WeightedGraph& g, Weight k_quarters) {
    SolveResult res;
    res.target_quarters = poljak_turzik_quarters(g).quarters + k_quarters;
    ReductionOutcome red = reduce(g, k_quarters, ReduceMode::kFull);
    if (red.k_remaining_quarters <= 0) {
        // The budget was consumed, so the bound-preserving extensions alone
        // reach the target from any cut of the edgeless residual.
        Cut cut = replay_extensions(g, red.trace, red.residual, Cut{});
        if (4 * cut.weight < res.target_quarters)
            throw ContractViolatedError("replayed cut misses its guaranteed size");
        res.yes = true;
        res.path = k_quarters <= 0 ? DecisionPath::kBoundImplied
                                   : DecisionPath::kBudgetExhausted;
        res.cut = std::move(cut);
        return res;
    }
    detail::EnumerationResult best =
        detail::enumerate_marked(g, red.marked, std::nullopt);
    res.yes = 4 * best.best_value >= res.target_quarters;
    res.path = DecisionPath::kEnumerated;
    res.cut = std::move(best.best_cut);
    res.cut_is_maximum = true;
    return res;
}

/// Convenience wrapper taking a whole-unit excess k (quarters = 4k).
inline SolveResult solve_k(const WeightedGraph& g, Weight k) {
    return solve(g, 4 * k);
}

}  // namespace maxcut

#endif
