#include "common.hpp"

using namespace rlcli;

namespace {

json lemma_report_json(const NumericLemmaReport& rep) {
    json instances = json::array();
    for (const LemmaInstance& inst : rep.instances) {
        instances.push_back(json{{"lemma", inst.lemma},
                                 {"family", inst.light_family ? "light" : "heavy"},
                                 {"member", inst.member},
                                 {"subset", inst.subset},
                                 {"lhs", rat_str(inst.lhs)},
                                 {"rhs", rat_str(inst.rhs)},
                                 {"slack", rat_str(inst.lhs - inst.rhs)},
                                 {"strict_required", inst.strict_required},
                                 {"ok", inst.ok}});
    }
    return json{{"m2_light", rat_str(rep.m2_light)},
                {"alpha", rat_str(rep.alpha)},
                {"m2_heavy", rat_str(rep.m2_heavy)},
                {"sandwich_applicable", rep.sandwich_applicable},
                {"sandwich_ok", rep.sandwich_ok},
                {"x_value", rat_str(rep.x_value)},
                {"all_ok", rep.all_ok},
                {"instances", instances}};
}

}  // namespace

int run_density(const CommonOpts& opts, const std::string& heavy_spec,
                const std::string& light_spec) {
    json out{{"schema", kSchema}, {"graphs", json::array()}};
    for (const auto& [lineno, g] : load_graphs(opts.input)) {
        json row{{"line", lineno}, {"graph", write_graph6(g)}};
        Density m = max_density(g);
        Density m2 = two_density(g);
        row["m"] = rat_str(m.value);
        row["m_witness"] = m.witness.indices();
        if (g.n >= 2) {
            Density m1 = one_density(g);
            row["m1"] = rat_str(m1.value);
            row["m1_witness"] = m1.witness.indices();
        }
        row["m2"] = rat_str(m2.value);
        row["m2_witness"] = m2.witness.indices();
        out["graphs"].push_back(std::move(row));
    }
    if (!heavy_spec.empty() && !light_spec.empty()) {
        GraphFamily heavy = parse_family(heavy_spec);
        GraphFamily light = parse_family(light_spec);
        bool relaxed = false;
        BalancedPair pair = pair_for(heavy, light, &relaxed);
        json fam{{"heavy", heavy_spec},
                 {"light", light_spec},
                 {"alpha", rat_str(pair.alpha)},
                 {"m2_light", rat_str(pair.m2_light)},
                 {"m2_heavy", rat_str(pair.m2_heavy)},
                 {"relaxed", relaxed}};
        json balance = json::array();
        for (int i = 0; i < light.size(); ++i)
            balance.push_back(json{{"family", "light"},
                                   {"member", i},
                                   {"strictly_2_balanced",
                                    is_strictly_two_balanced(light.members[i]).balanced}});
        for (int i = 0; i < heavy.size(); ++i)
            balance.push_back(
                json{{"family", "heavy"},
                     {"member", i},
                     {"strictly_mixed_balanced",
                      is_strictly_mixed_balanced(heavy.members[i], pair.m2_light).balanced}});
        fam["balancedness"] = std::move(balance);
        fam["lemmas"] = lemma_report_json(check_numeric_lemmas(pair));
        out["pair"] = std::move(fam);
    }
    write_output(opts, out.dump(2) + "\n");
    return 0;
}
