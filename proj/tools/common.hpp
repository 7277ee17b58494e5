#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ramseylab/density.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/graph6.hpp"
#include "ramseylab/rational.hpp"

namespace rlcli {

using json = nlohmann::ordered_json;
using namespace ramseylab;

inline constexpr const char* kSchema = "ramsey-lab/1";

struct CommonOpts {
    std::string input = "-";  // graph6 path or "-" for stdin
    std::string output;       // empty: stdout
    std::uint64_t seed = 1;
    int workers = 1;
    long long budget_nodes = 50000000;
    int budget_edges = 24;
    std::string format = "json";
    int vertex_cap = 0;   // 0: command default
    long long gamma = 0;  // 0: command default
};

inline void add_common_flags(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", opts.input, "graph6 input file ('-' for stdin)");
    cmd->add_option("-o,--output", opts.output, "output file (default stdout)");
    cmd->add_option("--seed", opts.seed, "master RNG seed");
    cmd->add_option("--workers", opts.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--budget-nodes", opts.budget_nodes, "search node budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-edges", opts.budget_edges, "edge budget for the conjecture search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--vertex-cap", opts.vertex_cap, "exploration vertex cap");
    cmd->add_option("--gamma", opts.gamma, "exploration degenerate-step cap");
}

/// Graphs from the input option, with 1-based line numbers for diagnostics.
inline std::vector<std::pair<int, Graph>> load_graphs(const std::string& input) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (input != "-") {
        file.open(input);
        if (!file) throw Error("cannot open input file: " + input);
        in = &file;
    }
    std::vector<std::pair<int, Graph>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.emplace_back(lineno, parse_graph6(line));
        } catch (const DecodeError& e) {
            throw DecodeError("line " + std::to_string(lineno) + ": " + e.what(), e.offset);
        }
    }
    return out;
}

/// Family specs: built-in names ("K4", "C8", "K3,3", "K3,3,3,3", "P5") or
/// "@file.g6" for a graph6 member list.
inline GraphFamily parse_family(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream file(spec.substr(1));
        if (!file) throw Error("cannot open family file: " + spec.substr(1));
        std::vector<Graph> members = read_graph6_stream(file);
        return GraphFamily(members, spec);
    }
    return GraphFamily({make_named(spec)}, spec);
}

inline void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        std::cout.flush();
    } else {
        std::ofstream file(opts.output, std::ios::binary);
        if (!file) throw Error("cannot open output file: " + opts.output);
        file << text;
    }
}

inline json density_json(const Density& d) {
    return json{{"value", rat_str(d.value)}, {"witness", d.witness.indices()}};
}

/// Builds the pair, falling back to relaxed validation for families that
/// fail strict balancedness (e.g. equal densities).
inline BalancedPair pair_for(const GraphFamily& heavy, const GraphFamily& light,
                             bool* relaxed_used = nullptr) {
    try {
        BalancedPair p = make_balanced_pair(heavy, light, false);
        if (relaxed_used) *relaxed_used = false;
        return p;
    } catch (const Error&) {
        BalancedPair p = make_balanced_pair(heavy, light, true);
        if (relaxed_used) *relaxed_used = true;
        return p;
    }
}

}  // namespace rlcli
