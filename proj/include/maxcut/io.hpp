#ifndef MAXCUT_IO_HPP
#define MAXCUT_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxcut/graph.hpp"
#include "maxcut/rules.hpp"

namespace maxcut {

/// Parses the edge-list format: `c` comment lines, exactly one
/// `p edge <n> <m>` header, then `e <u> <v> <w>` lines with 1-based ids
/// and mandatory positive weights. Repeated pairs merge; self-loops fail.
inline WeightedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = -1, declared_m = -1;
    std::vector<RawEdge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) throw ParseError(line_no, "duplicate header");
            std::string kind;
            if (!(ls >> kind >> n >> declared_m) || kind != "edge" || n < 0 ||
                declared_m < 0)
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            std::string rest;
            if (ls >> rest) throw ParseError(line_no, "trailing tokens after header");
            continue;
        }
        if (tag == "e") {
            if (n == -1) throw ParseError(line_no, "edge before header");
            long long u, v, w;
            if (!(ls >> u >> v >> w))
                throw ParseError(line_no, "malformed edge, expected 'e <u> <v> <w>'");
            std::string rest;
            if (ls >> rest) throw ParseError(line_no, "trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range");
            if (u == v) throw ParseError(line_no, "self-loop");
            if (w < 1) throw ParseError(line_no, "weight must be >= 1");
            if (w > kMaxEdgeWeight) throw ParseError(line_no, "weight exceeds 2^32");
            edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1),
                             static_cast<Weight>(w)});
            continue;
        }
        throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
    if (n == -1) throw ParseError(line_no, "missing header");
    if (static_cast<long long>(edges.size()) != declared_m)
        throw ParseError(line_no, "edge count does not match header");
    return WeightedGraph::from_edges(static_cast<int>(n), edges);
}

inline std::string serialize_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.slot_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
    return out.str();
}

/// {"value": <int>, "side1": [<1-based ids>]}
inline nlohmann::json cut_to_json(const Cut& cut) {
    nlohmann::json j;
    j["value"] = cut.weight;
    std::vector<int> ids;
    for (int v : cut.side1) ids.push_back(v + 1);
    j["side1"] = ids;
    return j;
}

/// One newline-delimited record per reduction step. Vertex ids are 1-based
/// to match the file format.
inline nlohmann::json step_to_json(const ReductionStep& step) {
    nlohmann::json j;
    j["rule_id"] = step.instance.rule_id();
    auto up = [](const std::vector<int>& vs) {
        std::vector<int> out;
        for (int v : vs) out.push_back(v + 1);
        return out;
    };
    nlohmann::json w;
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, Rule1>) {
                w = {{"x", r.x + 1}, {"y", r.y + 1}, {"z", r.z + 1}};
            } else if constexpr (std::is_same_v<T, Rule2> || std::is_same_v<T, Rule3> ||
                                 std::is_same_v<T, Rule4>) {
                w = {{"X", up(r.X)}, {"v", r.v + 1}};
            } else if constexpr (std::is_same_v<T, Rule5>) {
                w = {{"X", up(r.X)}, {"v", r.v + 1}, {"x", r.x + 1},
                     {"y", r.y + 1}, {"c", r.c}};
            } else if constexpr (std::is_same_v<T, Rule6>) {
                w = {{"a", r.a + 1}, {"b", r.b + 1}, {"c", r.c + 1}};
            } else if constexpr (std::is_same_v<T, Rule7>) {
                w = {{"v", r.v + 1}, {"a", r.a + 1}, {"b", r.b + 1}, {"c", r.c + 1}};
            } else {
                static_assert(std::is_same_v<T, Rule8>);
                w = {{"X", up(r.X)}, {"x", r.x + 1}, {"y", r.y + 1},
                     {"v", r.v + 1}, {"c", r.c}};
            }
        },
        step.instance.witness);
    j["witness"] = w;
    j["removed"] = up(step.removed);
    j["marked"] = up(step.marked);
    j["k_delta_quarters"] = step.k_delta_quarters;
    nlohmann::json payload = nlohmann::json::array();
    for (const Edge& e : step.payload)
        payload.push_back({{"u", e.u + 1}, {"v", e.v + 1}, {"w", e.w}});
    j["payload"] = payload;
    return j;
}

}  // namespace maxcut

#endif
