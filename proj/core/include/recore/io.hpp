#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "recore/errors.hpp"
#include "recore/graph.hpp"
#include "recore/state_set.hpp"

namespace recore {

// DIMACS .col graph format: optional `c` comment lines, exactly one
// `p edge <n> <m>` line before any edge, then `e <u> <v>` lines with
// 1-based endpoints. Duplicate edges are merged; self-loops are errors.
// Accepts \n and \r\n line endings and arbitrary run-length whitespace.
Graph parse_dimacs(std::string_view text);
Graph parse_dimacs_file(const std::filesystem::path& path);

void serialize_dimacs(const Graph& g, std::ostream& out);
std::string serialize_dimacs(const Graph& g);

struct StatePair {
  StateSet start;
  StateSet goal;
};

// .dat state format: exactly one `s v1 v2 ...` line (start) and one
// `t v1 v2 ...` line (goal), 1-based nodes, `c` comment lines allowed.
StatePair parse_dat(std::string_view text, int node_count);
StatePair parse_dat_file(const std::filesystem::path& path, int node_count);

void serialize_dat(const StateSet& start, const StateSet& goal, std::ostream& out);
std::string serialize_dat(const StateSet& start, const StateSet& goal);

}  // namespace recore
