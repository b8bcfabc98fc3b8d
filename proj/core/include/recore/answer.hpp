#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "recore/reach.hpp"
#include "recore/state_set.hpp"

namespace recore {

// Answer stream: for REACHABLE one `a <v1> <v2> ...` line per state in
// order (nodes ascending, single spaces) followed by `s REACHABLE`; for the
// other verdicts a single `s <VERDICT>` line.
void write_answer(std::ostream& out, const ReconfigResult& result);
std::string answer_to_string(const ReconfigResult& result);

struct ParsedAnswer {
  Verdict verdict = Verdict::Unknown;
  std::vector<StateSet> states;  // the `a` lines, in order
};

// Re-parses an answer stream; `c` lines are ignored. Throws ParseError on
// malformed input or a missing/duplicate `s` line.
ParsedAnswer parse_answer(std::string_view text, int node_count);

// Per-depth solving statistics as a trailing comment block (`c ...` lines)
// or as a single-line JSON document.
void write_stats_comments(std::ostream& out, const ReconfigResult& result);
std::string stats_to_json(const ReconfigResult& result);

}  // namespace recore
