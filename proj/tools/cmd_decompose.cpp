#include "common.hpp"
#include "ramseylab/decompose.hpp"

using namespace rlcli;

int run_decompose(const CommonOpts& opts, const std::string& heavy_spec,
                  const std::string& light_spec, const std::string& strategy) {
    GraphFamily heavy = parse_family(heavy_spec);
    GraphFamily light = parse_family(light_spec);
    BalancedPair pair = pair_for(heavy, light);
    json out{{"schema", kSchema},
             {"heavy", heavy_spec},
             {"light", light_spec},
             {"alpha", rat_str(pair.alpha)},
             {"results", json::array()}};
    int exit_code = 0;
    for (const auto& [lineno, g] : load_graphs(opts.input)) {
        json row{{"line", lineno}, {"graph", write_graph6(g)}};
        try {
            EdgeBipartition parts = [&] {
                if (strategy.rfind("integer:", 0) == 0)
                    return split_integer_case(g, std::stoll(strategy.substr(8)));
                AntiRamseyOutcome result = anti_ramsey_coloring(g, pair);
                if (!result.success) throw DomainError(result.reason);
                return result.parts;
            }();
            bool verified = verify_coloring(g, parts, pair).ok;
            row["strategy"] = parts.strategy;
            row["red"] = parts.red.indices();
            row["blue"] = parts.blue.indices();
            row["verified"] = verified;
            if (!verified) exit_code = 2;
        } catch (const Error& e) {
            row["error"] = e.what();
            exit_code = 2;
        }
        out["results"].push_back(std::move(row));
    }
    write_output(opts, out.dump(2) + "\n");
    return exit_code;
}
