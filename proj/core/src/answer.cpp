#include "recore/answer.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace recore {

namespace {

const char* result_name(sat::SolveResult r) {
  switch (r) {
    case sat::SolveResult::Sat: return "SAT";
    case sat::SolveResult::Unsat: return "UNSAT";
    case sat::SolveResult::Interrupted: return "INTERRUPTED";
  }
  return "?";
}

}  // namespace

void write_answer(std::ostream& out, const ReconfigResult& result) {
  if (result.verdict == Verdict::Reachable) {
    for (const StateSet& state : result.sequence) {
      out << 'a';
      state.for_each([&](int v) { out << ' ' << v + 1; });
      out << '\n';
    }
  }
  out << "s " << to_string(result.verdict) << '\n';
}

std::string answer_to_string(const ReconfigResult& result) {
  std::ostringstream out;
  write_answer(out, result);
  return std::move(out).str();
}

ParsedAnswer parse_answer(std::string_view text, int node_count) {
  ParsedAnswer answer;
  bool have_verdict = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty() && line[0] != 'c') {
      std::istringstream iss{std::string(line)};
      std::string kind;
      iss >> kind;
      if (kind == "a") {
        if (have_verdict) throw ParseError(line_no, "'a' line after 's' line");
        StateSet state(node_count);
        int v;
        while (iss >> v) {
          if (v < 1 || v > node_count)
            throw ParseError(line_no, "node " + std::to_string(v) + " out of range");
          if (state.contains(v - 1))
            throw ParseError(line_no, "duplicate node " + std::to_string(v));
          state.insert(v - 1);
        }
        if (!iss.eof()) throw ParseError(line_no, "expected integer node id");
        answer.states.push_back(std::move(state));
      } else if (kind == "s") {
        if (have_verdict) throw ParseError(line_no, "duplicate 's' line");
        std::string verdict;
        iss >> verdict;
        if (verdict == "REACHABLE")
          answer.verdict = Verdict::Reachable;
        else if (verdict == "UNREACHABLE")
          answer.verdict = Verdict::Unreachable;
        else if (verdict == "UNKNOWN")
          answer.verdict = Verdict::Unknown;
        else
          throw ParseError(line_no, "unknown verdict '" + verdict + "'");
        have_verdict = true;
      } else {
        throw ParseError(line_no, "unexpected line type '" + kind + "'");
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (!have_verdict) throw ParseError(line_no, "missing 's' line");
  return answer;
}

void write_stats_comments(std::ostream& out, const ReconfigResult& result) {
  for (const DepthStats& d : result.depths) {
    out << "c depth " << d.depth << " result " << result_name(d.check_result)
        << " time " << d.check_seconds << " conflicts " << d.conflicts
        << " decisions " << d.decisions << " propagations " << d.propagations
        << " clauses " << d.clauses << " learnts " << d.learnts << " vars "
        << d.vars;
    if (d.ran_probe)
      out << " probe " << result_name(d.probe_result) << " probe_time "
          << d.probe_seconds;
    out << '\n';
  }
  out << "c verdict " << to_string(result.verdict);
  if (result.verdict == Verdict::Reachable) out << " length " << result.length;
  out << " total_time " << result.total_seconds << " depths "
      << result.depths.size() << '\n';
}

std::string stats_to_json(const ReconfigResult& result) {
  nlohmann::ordered_json doc;
  doc["verdict"] = to_string(result.verdict);
  if (result.verdict == Verdict::Reachable) doc["length"] = result.length;
  doc["total_seconds"] = result.total_seconds;
  nlohmann::ordered_json depths = nlohmann::ordered_json::array();
  for (const DepthStats& d : result.depths) {
    nlohmann::ordered_json row;
    row["depth"] = d.depth;
    row["result"] = result_name(d.check_result);
    row["seconds"] = d.check_seconds;
    row["conflicts"] = d.conflicts;
    row["decisions"] = d.decisions;
    row["propagations"] = d.propagations;
    row["clauses"] = d.clauses;
    row["learnts"] = d.learnts;
    row["vars"] = d.vars;
    if (d.ran_probe) {
      row["probe_result"] = result_name(d.probe_result);
      row["probe_seconds"] = d.probe_seconds;
    }
    depths.push_back(std::move(row));
  }
  doc["depths"] = std::move(depths);
  return doc.dump();
}

}  // namespace recore
