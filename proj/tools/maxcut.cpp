#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "maxcut/maxcut.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw maxcut::Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw maxcut::Error("cannot write file: " + path);
    out << text;
}

struct TargetFlags {
    std::optional<long long> k;
    std::optional<long long> quarters;
    std::optional<long long> target;

    void attach(CLI::App* cmd) {
        cmd->add_option("-k,--excess", k, "excess over the bound, whole units");
        cmd->add_option("--quarters", quarters, "excess over the bound, quarter units");
        cmd->add_option("--target", target, "absolute cut size to certify");
    }
    maxcut::Weight resolve_quarters(const maxcut::WeightedGraph& g) const {
        int given = (k ? 1 : 0) + (quarters ? 1 : 0) + (target ? 1 : 0);
        if (given != 1)
            throw maxcut::BadParametersError(
                "give exactly one of -k, --quarters, --target");
        if (k) return 4 * static_cast<maxcut::Weight>(*k);
        if (quarters) return static_cast<maxcut::Weight>(*quarters);
        if (*target < 0) throw maxcut::BadParametersError("--target must be >= 0");
        return 4 * static_cast<maxcut::Weight>(*target) -
               maxcut::poljak_turzik_quarters(g).quarters;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"MaxCut above the spanning-forest bound"};
    app.require_subcommand(1);

    std::string file, emit_cut, out_path;

    auto* decide_cmd = app.add_subcommand("decide", "answer yes/no for the target");
    TargetFlags decide_flags;
    decide_flags.attach(decide_cmd);
    decide_cmd->add_option("file", file, "graph file")->required();

    auto* solve_cmd = app.add_subcommand("solve", "answer and produce a cut");
    TargetFlags solve_flags;
    solve_flags.attach(solve_cmd);
    solve_cmd->add_option("file", file, "graph file")->required();
    solve_cmd->add_option("--emit-cut", emit_cut, "write the cut record to a file");

    auto* bound_cmd = app.add_subcommand("bound", "print the lower bounds");
    bound_cmd->add_option("file", file, "graph file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum cut, small graphs");
    oracle_cmd->add_option("file", file, "graph file")->required();

    auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
    std::string family;
    long long gi = 1, gt = 1, gn = 1, gm = 0, gwmax = 1, gblocks = 1, gmaxblock = 2,
              grule = 1;
    unsigned long long gseed = 0;
    gen_cmd->add_option("family", family, "obs6-tree | odd-clique | random | ucf | rule-gallery")
        ->required();
    gen_cmd->add_option("--i", gi, "path edge count (obs6-tree)");
    gen_cmd->add_option("--t", gt, "half size (odd-clique)");
    gen_cmd->add_option("--n", gn, "vertex count (random)");
    gen_cmd->add_option("--m", gm, "edge count (random)");
    gen_cmd->add_option("--wmax", gwmax, "maximum edge weight");
    gen_cmd->add_option("--blocks", gblocks, "block count (ucf)");
    gen_cmd->add_option("--maxblock", gmaxblock, "maximum block size (ucf)");
    gen_cmd->add_option("--rule", grule, "rule id (rule-gallery)");
    gen_cmd->add_option("--seed", gseed, "random seed");
    gen_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* trace_cmd = app.add_subcommand("trace", "full reduction trace as records");
    TargetFlags trace_flags;
    trace_flags.attach(trace_cmd);
    trace_cmd->add_option("file", file, "graph file")->required();

    CLI11_PARSE(app, argc, argv);

    if (decide_cmd->parsed()) {
        maxcut::WeightedGraph g = maxcut::parse_graph(read_file(file));
        maxcut::DecideResult r = maxcut::decide(g, decide_flags.resolve_quarters(g));
        std::cout << (r.yes ? "yes" : "no") << '\n';
        return r.yes ? 0 : 1;
    }
    if (solve_cmd->parsed()) {
        maxcut::WeightedGraph g = maxcut::parse_graph(read_file(file));
        maxcut::SolveResult r = maxcut::solve(g, solve_flags.resolve_quarters(g));
        std::cout << (r.yes ? "yes" : "no") << '\n';
        if (r.yes) {
            std::string record = maxcut::cut_to_json(r.cut).dump();
            std::cout << record << '\n';
            if (!emit_cut.empty()) write_file(emit_cut, record + "\n");
        }
        return r.yes ? 0 : 1;
    }
    if (bound_cmd->parsed()) {
        maxcut::WeightedGraph g = maxcut::parse_graph(read_file(file));
        std::cout << "PT=" << maxcut::poljak_turzik_quarters(g).to_string()
                  << ", EE=" << maxcut::edwards_erdos_quarters(g).to_string() << '\n';
        return 0;
    }
    if (oracle_cmd->parsed()) {
        maxcut::WeightedGraph g = maxcut::parse_graph(read_file(file));
        maxcut::OracleResult r = maxcut::brute_max_cut(g);
        std::cout << maxcut::cut_to_json(r.cut).dump() << '\n';
        return 0;
    }
    if (gen_cmd->parsed()) {
        maxcut::WeightedGraph g;
        if (family == "obs6-tree") {
            g = maxcut::gen_obs6_tree(static_cast<int>(gi));
        } else if (family == "odd-clique") {
            g = maxcut::gen_odd_clique(static_cast<int>(gt));
        } else if (family == "random") {
            g = maxcut::gen_random_connected(static_cast<int>(gn), gm, gwmax, gseed);
        } else if (family == "ucf") {
            g = maxcut::gen_ucf(static_cast<int>(gblocks), static_cast<int>(gmaxblock),
                                gwmax, gseed);
        } else if (family == "rule-gallery") {
            g = maxcut::gen_rule_gallery(static_cast<int>(grule), gseed);
        } else {
            throw maxcut::BadParametersError("unknown family: " + family);
        }
        std::string text = maxcut::serialize_graph(g);
        if (out_path.empty())
            std::cout << text;
        else
            write_file(out_path, text);
        return 0;
    }
    if (trace_cmd->parsed()) {
        maxcut::WeightedGraph g = maxcut::parse_graph(read_file(file));
        maxcut::ReductionOutcome out =
            maxcut::reduce(g, trace_flags.resolve_quarters(g), maxcut::ReduceMode::kFull);
        for (const maxcut::ReductionStep& step : out.trace)
            std::cout << maxcut::step_to_json(step).dump() << '\n';
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
