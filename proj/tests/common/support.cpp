#include "support.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "recore/sat/solver.hpp"

namespace recore::test {

int rand_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

Graph demo_graph() {
  return Graph(6, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
}

Instance demo_instance_tj() {
  Graph g = demo_graph();
  return make_instance(g, nodes(6, {2, 5}), nodes(6, {3, 4}), Rule::TokenJumping);
}

Instance demo_instance_tar(int threshold) {
  Graph g = demo_graph();
  return make_instance(g, nodes(6, {2, 5}), nodes(6, {3, 4}),
                       Rule::TokenAdditionRemoval, threshold);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph edgeless_graph(int n) { return Graph(n, {}); }

Graph hub_gadget_union(int count, int gadget_size) {
  std::vector<std::pair<int, int>> edges;
  for (int gi = 0; gi < count; ++gi) {
    int base = gi * gadget_size;
    int a = base, b = base + 1;
    edges.emplace_back(a, b);
    for (int p = base + 2; p < base + gadget_size; ++p) {
      edges.emplace_back(a, p);
      edges.emplace_back(b, p);
    }
  }
  return Graph(count * gadget_size, std::move(edges));
}

StateSet nodes(int n, std::initializer_list<int> labels_1based) {
  StateSet s(n);
  for (int label : labels_1based) s.insert(label - 1);
  return s;
}

Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(rand_int(rng, 0, v - 1), v);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < extra_edge_prob) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph random_graph(Rng& rng, int n, double edge_prob) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < edge_prob) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

StateSet random_subset(Rng& rng, int n) {
  StateSet s(n);
  for (int v = 0; v < n; ++v)
    if (rng() & 1) s.insert(v);
  return s;
}

bool bf_is_dominating(const Graph& g, const StateSet& s) {
  for (int v = 0; v < g.node_count(); ++v) {
    bool covered = s.contains(v);
    for (auto [a, b] : g.edges()) {
      if (covered) break;
      if (a == v && s.contains(b)) covered = true;
      if (b == v && s.contains(a)) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

namespace {

template <typename F>
void for_each_combination(int n, int k, F&& fn) {
  std::vector<int> pick(static_cast<size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return;
  while (true) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<StateSet> bf_dominating_sets(const Graph& g, int k) {
  std::vector<StateSet> out;
  if (k == 0) {
    if (g.node_count() == 0) out.push_back(StateSet(0));
    return out;
  }
  for_each_combination(g.node_count(), k, [&](const std::vector<int>& pick) {
    StateSet s = StateSet::of(g.node_count(), pick);
    if (bf_is_dominating(g, s)) out.push_back(std::move(s));
  });
  return out;
}

std::vector<StateSet> bf_dominating_sets_up_to(const Graph& g, int th) {
  std::vector<StateSet> out;
  for (int k = 0; k <= std::min(th, g.node_count()); ++k) {
    auto sized = bf_dominating_sets(g, k);
    out.insert(out.end(), sized.begin(), sized.end());
  }
  return out;
}

int bf_min_dominating_size(const Graph& g) {
  for (int k = 0; k <= g.node_count(); ++k)
    if (!bf_dominating_sets(g, k).empty()) return k;
  return g.node_count();
}

std::optional<int> bf_reconfig_distance(const Instance& inst) {
  std::vector<StateSet> states =
      inst.rule == Rule::TokenJumping
          ? bf_dominating_sets(inst.graph, inst.token_count)
          : bf_dominating_sets_up_to(inst.graph, inst.threshold);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < states.size(); ++i)
    index[states[i].to_nodes()] = static_cast<int>(i);
  auto find = [&](const StateSet& s) {
    auto it = index.find(s.to_nodes());
    return it == index.end() ? -1 : it->second;
  };
  int start = find(inst.start), goal = find(inst.goal);
  if (start < 0 || goal < 0) return std::nullopt;

  std::vector<int> dist(states.size(), -1);
  std::deque<int> queue{start};
  dist[static_cast<size_t>(start)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == goal) return dist[static_cast<size_t>(u)];
    for (size_t v = 0; v < states.size(); ++v) {
      if (dist[v] >= 0) continue;
      if (adjacency_check(inst.rule, inst.threshold, states[static_cast<size_t>(u)],
                          states[v])) {
        dist[v] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(static_cast<int>(v));
      }
    }
  }
  return std::nullopt;
}

bool tt_satisfiable(int num_vars, const std::vector<std::vector<sat::Lit>>& clauses,
                    const std::vector<sat::Lit>& assumptions) {
  uint64_t count = uint64_t{1} << num_vars;
  for (uint64_t a = 0; a < count; ++a) {
    auto holds = [&](sat::Lit l) {
      bool v = (a >> (l.var() - 1)) & 1;
      return l.is_negative() ? !v : v;
    };
    bool ok = true;
    for (sat::Lit l : assumptions)
      if (!holds(l)) {
        ok = false;
        break;
      }
    for (const auto& clause : clauses) {
      if (!ok) break;
      bool sat = false;
      for (sat::Lit l : clause)
        if (holds(l)) {
          sat = true;
          break;
        }
      ok = sat;
    }
    if (ok) return true;
  }
  return false;
}

std::set<std::vector<bool>> enumerate_projections(
    int num_vars, const std::vector<std::vector<sat::Lit>>& clauses,
    const std::vector<sat::Lit>& projection) {
  sat::Solver solver;
  for (int v = 0; v < num_vars; ++v) solver.new_var();
  for (const auto& clause : clauses) solver.add_clause(clause);

  std::set<std::vector<bool>> out;
  while (solver.solve() == sat::SolveResult::Sat) {
    std::vector<bool> assignment;
    std::vector<sat::Lit> blocking;
    assignment.reserve(projection.size());
    for (sat::Lit l : projection) {
      bool value = solver.model_value(l);
      assignment.push_back(value);
      blocking.push_back(value ? ~l : l);
    }
    out.insert(std::move(assignment));
    solver.add_clause(blocking);
  }
  return out;
}

}  // namespace recore::test
