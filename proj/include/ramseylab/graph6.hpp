#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ramseylab/graph.hpp"

namespace ramseylab {

/// Decodes one graph6 line (optionally prefixed with ">>graph6<<").
/// Strict: rejects bad characters, wrong length and nonzero padding bits,
/// reporting the byte offset of the defect.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding of a graph (no header, no trailing newline).
std::string write_graph6(const Graph& g);

/// Reads a newline-delimited graph6 stream; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace ramseylab
