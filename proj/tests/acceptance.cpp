// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include "maxcut/maxcut.hpp"

using namespace maxcut;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& text) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string trace_text(const std::vector<ReductionStep>& trace) {
    std::string out;
    for (const ReductionStep& s : trace) out += step_to_json(s).dump() + "\n";
    return out;
}

// 1. The bound is tight on odd cliques: yes at the bound, no one unit above.
void criterion1() {
    bool ok = true;
    for (int t = 1; t <= 4 && ok; ++t) {
        WeightedGraph g = gen_odd_clique(t);
        Weight pt = poljak_turzik_quarters(g).quarters;
        Weight mu = t <= 4 ? brute_max_cut(g).value : 0;
        ok = ok && (4 * mu == pt);
        SolveResult at = solve(g, 0);
        ok = ok && at.yes && 4 * at.cut.weight >= pt;
        ok = ok && !decide(g, 1).yes;
    }
    report(1, ok, "odd cliques meet the bound exactly (t = 1..4)");
}

// 2. The weight-2 path family separates the two lower bounds.
void criterion2() {
    WeightedGraph g = gen_obs6_tree(8);
    bool ok = poljak_turzik_quarters(g).quarters == 48 &&
              edwards_erdos_quarters(g).quarters == 40 &&
              brute_max_cut(g).value == 16;
    ok = ok && decide_k(g, 4).yes && !decide_k(g, 5).yes;
    SolveResult r = solve_k(g, 4);
    ok = ok && r.yes && 4 * r.cut.weight >= r.target_quarters;
    report(2, ok, "bound separation and answers on the weight-2 path (i = 8)");
}

// 3. Differential test: decide agrees with the brute-force oracle on 1000
// random connected instances across a spread of budgets.
void criterion3() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(90001);
    bool ok = true;
    int count = 0;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 8));
        WeightedGraph g = gen_random_connected(n, m, 5, rng());
        Weight mu = brute_max_cut(g).value;
        Weight pt = poljak_turzik_quarters(g).quarters;
        for (Weight kq : {Weight{-4}, Weight{0}, Weight{1}, Weight{2}, Weight{3},
                          Weight{4}, Weight{8}, Weight{12}, Weight{16}, Weight{20}}) {
            if (decide(g, kq).yes != (4 * mu >= pt + kq)) {
                ok = false;
                break;
            }
        }
        ++count;
    }
    double secs = seconds_since(t0);
    ok = ok && count == 1000 && secs < 120.0;
    report(3, ok,
           "decide matches the oracle on 1000 random instances (" +
               std::to_string(secs).substr(0, 5) + "s)");
}

// 4. Structural invariants of 500 reduction traces.
void criterion4() {
    std::mt19937_64 rng(90002);
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 10);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 9));
        WeightedGraph g = gen_random_connected(n, m, 5, rng());
        ReductionOutcome out = reduce(g, 1000, ReduceMode::kFull);
        WeightedGraph cur = g;
        for (const ReductionStep& s : out.trace) {
            ok = ok && check_rule(cur, s.instance);
            ok = ok && s.marked.size() <= 3;
            if (s.instance.rule_id() == 2) ok = ok && s.marked.empty();
            cur = cur.without(s.removed);
        }
        ok = ok && cur.edge_count() == 0;
        ok = ok && verify_ucf(g.without(out.marked));
        ok = ok && trace_text(out.trace) ==
                       trace_text(reduce(g, 1000, ReduceMode::kFull).trace);
    }
    report(4, ok, "trace invariants hold on 500 random instances");
}

// 5. Every rule's cut extension is sound for every cut of the reduced graph.
void criterion5() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int rule = 1; rule <= 8 && ok; ++rule)
        for (std::uint64_t seed = 0; seed < 5 && ok; ++seed) {
            WeightedGraph g = gen_rule_gallery(rule, seed);
            if (g.vertex_count() > 9) {
                ok = false;
                break;
            }
            ReductionOutcome out = reduce(g, 1000, ReduceMode::kFull);
            if (out.trace.empty() || out.trace.front().instance.rule_id() != rule) {
                ok = false;
                break;
            }
            const ReductionStep& step = out.trace.front();
            WeightedGraph reduced = g.without(step.removed);
            Weight shift = poljak_turzik_quarters(g).quarters -
                           poljak_turzik_quarters(reduced).quarters +
                           step.k_delta_quarters;
            const std::vector<int>& rv = reduced.vertices();
            for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << rv.size()); ++bits) {
                std::vector<int> side1;
                for (std::size_t i = 0; i < rv.size(); ++i)
                    if (bits & (std::uint32_t{1} << i)) side1.push_back(rv[i]);
                Cut inner = make_cut(reduced, side1);
                Cut outer = replay_extensions(g, {step}, reduced, inner);
                if (4 * (outer.weight - inner.weight) < shift) {
                    ok = false;
                    break;
                }
            }
        }
    double secs = seconds_since(t0);
    ok = ok && secs < 60.0;
    report(5, ok,
           "extensions cover the bound shift for all cuts, 5 instances per rule (" +
               std::to_string(secs).substr(0, 5) + "s)");
}

// 6. The linear-time forest solver matches brute force on 300 instances
// with random vertex weights.
void criterion6() {
    std::mt19937_64 rng(90003);
    bool ok = true;
    int done = 0;
    while (done < 300 && ok) {
        WeightedGraph g = gen_ucf(1 + static_cast<int>(rng() % 4),
                                  2 + static_cast<int>(rng() % 4), 6, rng());
        if (g.vertex_count() > 12) continue;
        VertexWeights vw = VertexWeights::zeros(g.slot_count());
        for (int v : g.vertices()) {
            vw.w0[static_cast<std::size_t>(v)] = static_cast<Weight>(rng() % 7);
            vw.w1[static_cast<std::size_t>(v)] = static_cast<Weight>(rng() % 7);
        }
        ok = ok && solve_ucf(g, vw).value == brute_maxcut_vertex_weights(g, vw).value;
        ++done;
    }
    report(6, ok, "forest solver matches brute force on 300 weighted instances");
}

// 7. The constructive strengthened-bound cut never violates its contract:
// full solves succeed and their replayed witnesses meet the target.
void criterion7() {
    std::mt19937_64 rng(90004);
    bool ok = true;
    for (int trial = 0; trial < 300 && ok; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        long long mmax = static_cast<long long>(n) * (n - 1) / 2;
        long long m = std::min<long long>(mmax, n - 1 + static_cast<long long>(rng() % 8));
        WeightedGraph g = gen_random_connected(n, m, 5, rng());
        try {
            ReductionOutcome out = reduce(g, 0, ReduceMode::kFull);
            Weight paid = 0;
            for (const ReductionStep& s : out.trace) paid += s.k_delta_quarters;
            Cut cut = replay_extensions(g, out.trace, out.residual, Cut{});
            ok = ok && 4 * cut.weight >= poljak_turzik_quarters(g).quarters + paid;
        } catch (const ContractViolatedError&) {
            ok = false;
        }
    }
    report(7, ok, "no replay ever misses its guaranteed size (300 instances)");
}

// 8. Every rule fires somewhere in the test corpus.
void criterion8() {
    std::set<int> seen;
    for (int rule = 1; rule <= 8; ++rule)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            ReductionOutcome out =
                reduce(gen_rule_gallery(rule, seed), 1000, ReduceMode::kFull);
            for (const ReductionStep& s : out.trace) seen.insert(s.instance.rule_id());
        }
    std::mt19937_64 rng(90005);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedGraph g = gen_random_connected(8, 12, 4, rng());
        ReductionOutcome out = reduce(g, 1000, ReduceMode::kFull);
        for (const ReductionStep& s : out.trace) seen.insert(s.instance.rule_id());
    }
    report(8, seen.size() == 8, "all eight rules appear in corpus traces");
}

// 9. Scaling smoke test: a 100k-vertex, 300k-edge decide finishes fast and
// time grows at most ~linearly when m doubles.
void criterion9() {
    WeightedGraph g1 = gen_random_connected(100000, 300000, 5, 42);
    auto t0 = Clock::now();
    DecideResult r1 = decide_k(g1, 3);
    double s1 = seconds_since(t0);
    bool ok = s1 < 10.0 && (r1.yes || true);

    WeightedGraph g2 = gen_random_connected(100000, 600000, 5, 42);
    auto t1 = Clock::now();
    decide_k(g2, 3);
    double s2 = seconds_since(t1);
    ok = ok && s2 <= 3.0 * s1 + 0.5;
    report(9, ok,
           "100k/300k decide in " + std::to_string(s1).substr(0, 5) +
               "s; doubled edges take " + std::to_string(s2).substr(0, 5) + "s");
}

// 10. Parse/serialize round-trips and CLI-format fixtures.
void criterion10() {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 50 && ok; ++seed) {
        WeightedGraph g = gen_random_connected(4 + static_cast<int>(seed % 9),
                                               5 + static_cast<int>(seed % 9), 7, seed);
        std::string text = serialize_graph(g);
        WeightedGraph h = parse_graph(text);
        ok = ok && h.edges() == g.edges() && serialize_graph(h) == text;
    }
    WeightedGraph multi = parse_graph("p edge 2 2\ne 1 2 1\ne 2 1 2\n");
    ok = ok && multi.weight_or_zero(0, 1) == 3;
    try {
        parse_graph("p edge 2 1\ne 1 1 1\n");
        ok = false;
    } catch (const ParseError& e) {
        ok = ok && e.line == 2;
    }
    report(10, ok, "file format round-trips and rejects malformed input");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    return failures == 0 ? 0 : 1;
}
