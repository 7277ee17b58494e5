#include "ramseylab/fixtures.hpp"

#include "ramseylab/graph6.hpp"

namespace ramseylab {

using nlohmann::json;

namespace {

json family_to_json(const GraphFamily& fam) {
    json members = json::array();
    for (const Graph& g : fam.members) members.push_back(write_graph6(g));
    return json{{"name", fam.name}, {"members", members}};
}

GraphFamily family_from_json(const json& j) {
    std::vector<Graph> members;
    for (const auto& m : j.at("members")) members.push_back(parse_graph6(m.get<std::string>()));
    return GraphFamily(members, j.at("name").get<std::string>());
}

json copies_to_json(const std::vector<Copy>& copies) {
    json out = json::array();
    for (const Copy& c : copies) out.push_back(json{{"edges", c.edges}, {"member", c.member}});
    return out;
}

std::vector<Copy> copies_from_json(const json& j) {
    std::vector<Copy> out;
    for (const auto& c : j) {
        Copy copy;
        copy.edges = c.at("edges").get<std::vector<int>>();
        copy.member = c.value("member", 0);
        std::sort(copy.edges.begin(), copy.edges.end());
        out.push_back(std::move(copy));
    }
    return out;
}

const char* kind_name(StepKind k) {
    switch (k) {
        case StepKind::degenerate_heavy: return "degenerate-H";
        case StepKind::pristine: return "pristine";
        case StepKind::degenerate_light: return "degenerate-L";
    }
    return "?";
}

const char* stop_name(StopReason r) {
    switch (r) {
        case StopReason::vertex_cap: return "vertex-cap";
        case StopReason::exhausted: return "exhausted";
        case StopReason::gamma_degenerate: return "gamma-degenerate";
    }
    return "?";
}

}  // namespace

json core_to_json(const CoreTuple& core) {
    return json{{"schema", kSchemaTag},
                {"graph", write_graph6(core.g)},
                {"heavy", family_to_json(core.heavy)},
                {"light", family_to_json(core.light)},
                {"f_h", copies_to_json(core.f_h)},
                {"f_l", copies_to_json(core.f_l)}};
}

CoreTuple core_from_json(const json& j) {
    if (j.value("schema", std::string(kSchemaTag)) != kSchemaTag)
        throw DomainError("unsupported fixture schema");
    CoreTuple core{parse_graph6(j.at("graph").get<std::string>()),
                   copies_from_json(j.at("f_h")),
                   copies_from_json(j.at("f_l")),
                   family_from_json(j.at("heavy")),
                   family_from_json(j.at("light"))};
    for (const Copy& c : core.f_h)
        for (int e : c.edges)
            if (e < 0 || e >= core.g.edge_count())
                throw DomainError("copy edge index out of range");
    for (const Copy& c : core.f_l)
        for (int e : c.edges)
            if (e < 0 || e >= core.g.edge_count())
                throw DomainError("copy edge index out of range");
    return core;
}

json step_to_json(const StepRecord& step) {
    json partners = json::array();
    for (const PartnerCopy& p : step.partners)
        partners.push_back(json{{"edge", p.edge},
                                {"copy", p.copy.edges},
                                {"member", p.copy.member}});
    json out{{"kind", kind_name(step.kind)},
             {"copy", step.main_copy.edges},
             {"member", step.main_copy.member},
             {"partners", partners},
             {"balance", rat_str(step.balance_after)},
             {"boundary", step.boundary_size_after}};
    if (step.root_edge >= 0) out["root"] = step.root_edge;
    return out;
}

json trace_summary_json(const ExplorationTrace& trace) {
    return json{{"schema", kSchemaTag},
                {"stop_reason", stop_name(trace.stop_reason)},
                {"start_edge", trace.start_edge},
                {"steps", trace.steps.size()},
                {"final_edges", trace.final_edges},
                {"alpha", rat_str(trace.config.alpha)},
                {"delta1", rat_str(trace.config.delta1)},
                {"gamma", trace.config.gamma},
                {"vertex_cap", trace.config.vertex_cap}};
}

std::string trace_to_json_lines(const ExplorationTrace& trace) {
    std::string out;
    for (const StepRecord& step : trace.steps) {
        out += step_to_json(step).dump();
        out += '\n';
    }
    out += trace_summary_json(trace).dump();
    out += '\n';
    return out;
}

}  // namespace ramseylab
