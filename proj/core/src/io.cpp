#include "recore/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace recore {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line_no, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" +
                                  std::string(tok) + "'");
  return value;
}

// Calls fn(line_no, tokens) for every non-empty, non-comment line.
template <typename F>
void for_each_line(std::string_view text, F&& fn) {
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    ++line_no;
    if (nl == std::string_view::npos && line.empty()) break;
    auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens[0] != "c") fn(line_no, tokens);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  bool have_header = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  for_each_line(text, [&](int line_no, const std::vector<std::string_view>& tok) {
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' line");
      if (tok.size() != 4 || tok[1] != "edge")
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      n = parse_int(tok[2], line_no, "node count");
      parse_int(tok[3], line_no, "edge count");
      if (n < 0) throw ParseError(line_no, "negative node count");
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before 'p' line");
      if (tok.size() != 3)
        throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
      int u = parse_int(tok[1], line_no, "endpoint");
      int v = parse_int(tok[2], line_no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(line_no, "unexpected line type '" + std::string(tok[0]) + "'");
    }
  });

  if (!have_header) throw ParseError(1, "missing 'p edge <n> <m>' line");
  return Graph(n, std::move(edges));
}

Graph parse_dimacs_file(const std::filesystem::path& path) {
  return parse_dimacs(read_file(path));
}

void serialize_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string serialize_dimacs(const Graph& g) {
  std::ostringstream out;
  serialize_dimacs(g, out);
  return std::move(out).str();
}

namespace {

StateSet parse_state_line(const std::vector<std::string_view>& tok, int line_no,
                          int node_count) {
  StateSet s(node_count);
  for (size_t i = 1; i < tok.size(); ++i) {
    int v = parse_int(tok[i], line_no, "node");
    if (v < 1 || v > node_count)
      throw ParseError(line_no, "node " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(node_count));
    if (s.contains(v - 1))
      throw ParseError(line_no, "duplicate node " + std::to_string(v));
    s.insert(v - 1);
  }
  return s;
}

}  // namespace

StatePair parse_dat(std::string_view text, int node_count) {
  bool have_start = false, have_goal = false;
  StateSet start, goal;

  for_each_line(text, [&](int line_no, const std::vector<std::string_view>& tok) {
    if (tok[0] == "s") {
      if (have_start) throw ParseError(line_no, "duplicate 's' line");
      start = parse_state_line(tok, line_no, node_count);
      have_start = true;
    } else if (tok[0] == "t") {
      if (have_goal) throw ParseError(line_no, "duplicate 't' line");
      goal = parse_state_line(tok, line_no, node_count);
      have_goal = true;
    } else {
      throw ParseError(line_no, "unexpected line type '" + std::string(tok[0]) + "'");
    }
  });

  if (!have_start) throw ParseError(1, "missing 's' line");
  if (!have_goal) throw ParseError(1, "missing 't' line");
  return {std::move(start), std::move(goal)};
}

StatePair parse_dat_file(const std::filesystem::path& path, int node_count) {
  return parse_dat(read_file(path), node_count);
}

void serialize_dat(const StateSet& start, const StateSet& goal, std::ostream& out) {
  out << 's';
  start.for_each([&](int v) { out << ' ' << v + 1; });
  out << '\n' << 't';
  goal.for_each([&](int v) { out << ' ' << v + 1; });
  out << '\n';
}

std::string serialize_dat(const StateSet& start, const StateSet& goal) {
  std::ostringstream out;
  serialize_dat(start, goal, out);
  return std::move(out).str();
}

}  // namespace recore
