#pragma once

#include <string>

#include <json.hpp>

#include "ramseylab/explore.hpp"
#include "ramseylab/ramsey.hpp"

namespace ramseylab {

inline constexpr const char* kSchemaTag = "ramsey-lab/1";

/// Core fixture format: graph6 host, family specs (members as graph6), and
/// explicit copy lists as edge-index arrays.
nlohmann::json core_to_json(const CoreTuple& core);
CoreTuple core_from_json(const nlohmann::json& j);

nlohmann::json step_to_json(const StepRecord& step);
nlohmann::json trace_summary_json(const ExplorationTrace& trace);

/// Whole trace as JSON lines: one StepRecord per line, then a summary line.
std::string trace_to_json_lines(const ExplorationTrace& trace);

}  // namespace ramseylab
