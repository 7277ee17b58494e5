#include <fstream>

#include "common.hpp"
#include "ramseylab/explore.hpp"
#include "ramseylab/fixtures.hpp"

using namespace rlcli;

int run_explore(const CommonOpts& opts, const std::string& fixture_path) {
    std::ifstream file(fixture_path);
    if (!file) throw Error("cannot open fixture: " + fixture_path);
    json fixture = json::parse(file);
    CoreTuple core = core_from_json(fixture);

    bool relaxed = false;
    BalancedPair pair = pair_for(core.heavy, core.light, &relaxed);
    int vertex_cap = opts.vertex_cap > 0 ? opts.vertex_cap : core.g.n + 1;
    std::optional<long long> gamma;
    if (opts.gamma > 0)
        gamma = opts.gamma;
    else if (relaxed)
        gamma = core.g.edge_count() + 1;  // effectively uncapped for the walk
    ExplorationConfig cfg = make_config(pair, vertex_cap, gamma);

    ExplorationTrace trace = explore_core(core, cfg);
    TraceReport report = verify_trace(trace, cfg);
    BoundaryReport boundary = pristine_boundary(trace);

    std::string lines = trace_to_json_lines(trace);
    json verdict{{"schema", kSchema},
                 {"verified", report.ok && boundary.findings.empty()},
                 {"stop_case", report.stop_case},
                 {"boundary_sizes", boundary.sizes},
                 {"findings", json::array()}};
    for (const TraceFinding& f : report.findings)
        verdict["findings"].push_back(json{{"step", f.step}, {"what", f.what}});
    for (const TraceFinding& f : boundary.findings)
        verdict["findings"].push_back(json{{"step", f.step}, {"what", f.what}});
    lines += verdict.dump() + "\n";
    write_output(opts, lines);
    return (report.ok && boundary.findings.empty()) ? 0 : 2;
}
