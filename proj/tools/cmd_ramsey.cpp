#include <fstream>

#include "common.hpp"
#include "ramseylab/fixtures.hpp"
#include "ramseylab/ramsey.hpp"

using namespace rlcli;

int run_ramsey(const CommonOpts& opts, const std::vector<std::string>& family_specs, bool minimal,
               const std::string& emit_core) {
    std::vector<GraphFamily> families;
    for (const std::string& spec : family_specs) families.push_back(parse_family(spec));
    if (!emit_core.empty() && families.size() != 2)
        throw DomainError("--emit-core needs exactly two families");

    json out{{"schema", kSchema}, {"families", family_specs}, {"results", json::array()}};
    int exit_code = 0;
    for (const auto& [lineno, g] : load_graphs(opts.input)) {
        json row{{"line", lineno}, {"graph", write_graph6(g)}};
        RamseyResult r = ramsey_decide(g, families, opts.budget_nodes);
        row["nodes"] = r.nodes;
        switch (r.verdict) {
            case RamseyResult::Verdict::ramsey: row["ramsey"] = true; break;
            case RamseyResult::Verdict::not_ramsey:
                row["ramsey"] = false;
                row["witness"] = r.witness.colors;
                break;
            case RamseyResult::Verdict::budget:
                row["verdict"] = "budget";
                row["note"] = r.note;
                exit_code = 2;
                break;
        }
        if (r.verdict == RamseyResult::Verdict::ramsey && (minimal || !emit_core.empty())) {
            Graph min = minimal_ramsey_subgraph(g, families, opts.budget_nodes);
            row["minimal"] = write_graph6(min);
            if (!emit_core.empty()) {
                BalancedPair pair = pair_for(families[0], families[1]);
                CoreTuple core = extract_core(min, pair, opts.budget_nodes);
                std::ofstream file(emit_core, std::ios::binary);
                if (!file) throw Error("cannot open fixture output: " + emit_core);
                file << core_to_json(core).dump(2) << "\n";
                row["core"] = emit_core;
            }
        }
        out["results"].push_back(std::move(row));
    }
    write_output(opts, out.dump(2) + "\n");
    return exit_code;
}
