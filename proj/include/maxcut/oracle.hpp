#ifndef MAXCUT_ORACLE_HPP
#define MAXCUT_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "maxcut/bounds.hpp"
#include "maxcut/graph.hpp"

namespace maxcut {

struct OracleResult {
    Weight value = 0;
    Cut cut;
};

namespace detail {

/// Lexicographic order on vertex sets viewed as ascending id lists.
inline bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a != 0 || b != 0) {
        if (a == 0) return true;
        if (b == 0) return false;
        int ea = std::countr_zero(a);
        int eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

inline std::vector<int> mask_to_set(std::uint32_t mask, const std::vector<int>& verts) {
    std::vector<int> out;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (mask & (std::uint32_t{1} << i)) out.push_back(verts[i]);
    return out;
}

}  // namespace detail

/// Exact maximum cut by enumeration, usable up to n = 24. Vertex 0 (the
/// smallest present id) is pinned outside the cut; Gray-code single-vertex
/// flips keep each step O(deg). Ties resolve to the lexicographically
/// smallest side1.
inline OracleResult brute_max_cut(const WeightedGraph& g) {
    const std::vector<int>& verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    if (n > 24) throw TooLargeError("brute_max_cut limited to 24 vertices");
    if (n == 0) return {0, {}};

    // Local dense indices; verts[0] stays on side 0, the rest toggle.
    std::vector<int> local(static_cast<std::size_t>(g.slot_count()), -1);
    for (int i = 0; i < n; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;

    std::vector<std::vector<std::pair<int, Weight>>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges()) {
        int a = local[static_cast<std::size_t>(e.u)];
        int b = local[static_cast<std::size_t>(e.v)];
        adj[static_cast<std::size_t>(a)].emplace_back(b, e.w);
        adj[static_cast<std::size_t>(b)].emplace_back(a, e.w);
    }

    std::uint32_t mask = 0;  // bit i set <=> local vertex i on side 1
    Weight value = 0;
    std::uint32_t best_mask = 0;
    Weight best_value = 0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t it = 1; it < steps; ++it) {
        // Gray code: flip local vertex (ctz + 1); vertex 0 never flips.
        int flip = std::countr_zero(it) + 1;
        std::uint32_t bit = std::uint32_t{1} << flip;
        bool entering = (mask & bit) == 0;
        for (auto [to, w] : adj[static_cast<std::size_t>(flip)]) {
            bool to_in = (mask & (std::uint32_t{1} << to)) != 0;
            // Crossing toggles for each incident edge.
            if (to_in == !entering)
                value += w;
            else
                value -= w;
        }
        mask ^= bit;
        if (value > best_value ||
            (value == best_value && detail::mask_lex_less(mask, best_mask)))
            best_mask = mask, best_value = value;
    }
    Cut cut{detail::mask_to_set(best_mask, verts), best_value};
    return {best_value, std::move(cut)};
}

/// Checks the Poljak-Turzik bound against ground truth. A false return on
/// any input is a hard failure of the implementation (or the theorem).
inline bool assert_pt_bound(const WeightedGraph& g) {
    OracleResult r = brute_max_cut(g);
    return 4 * r.value >= poljak_turzik_quarters(g).quarters;
}

}  // namespace maxcut

#endif
