#include "recore/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>

namespace recore {

namespace {

// C(n,k) with saturation; good enough for limit checks.
double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 1e18) return 1e18;
  }
  return r;
}

struct Enumerator {
  const Graph& g;
  int max_size;
  bool record_smaller;  // record every dominating prefix, not only full-size sets
  int64_t max_states;
  std::vector<StateSet> out;
  StateSet current;

  Enumerator(const Graph& graph, int size, bool smaller, int64_t cap)
      : g(graph), max_size(size), record_smaller(smaller), max_states(cap),
        current(graph.node_count()) {}

  void record() {
    if (static_cast<int64_t>(out.size()) >= max_states)
      throw LimitError("state count exceeds limit " + std::to_string(max_states));
    out.push_back(current);
  }

  void run(int first, int depth, const StateSet& covered) {
    int uncovered = g.node_count() - covered.cardinality();
    if (record_smaller && uncovered == 0) record();
    if (depth == max_size) {
      if (!record_smaller && uncovered == 0) record();
      return;
    }
    int remaining = max_size - depth;
    if (uncovered > remaining * g.max_closed_degree()) return;  // unreachable coverage
    // exact-size sets must leave room for the remaining picks; smaller sets
    // are recorded along the way and may use any suffix
    int last = record_smaller ? g.node_count() - 1 : g.node_count() - remaining;
    for (int v = first; v <= last; ++v) {
      current.insert(v);
      StateSet next_covered = covered;
      next_covered.unite_with(g.closed_neighborhood(v));
      run(v + 1, depth + 1, next_covered);
      current.erase(v);
    }
  }
};

}  // namespace

std::vector<StateSet> enumerate_dominating_sets(const Graph& g, int k,
                                                const OracleLimits& limits) {
  if (k < 0 || k > g.node_count())
    throw InputError("requested size outside 0..n");
  double combos = binomial(g.node_count(), k);
  if (combos > limits.max_combinations)
    throw LimitError("refusing enumeration: C(" + std::to_string(g.node_count()) + "," +
                     std::to_string(k) + ") = " + std::to_string(combos) +
                     " exceeds limit " + std::to_string(limits.max_combinations));
  Enumerator e(g, k, /*smaller=*/false, limits.max_states);
  e.run(0, 0, StateSet(g.node_count()));
  return std::move(e.out);
}

std::vector<StateSet> enumerate_dominating_sets_up_to(const Graph& g, int th,
                                                      const OracleLimits& limits) {
  if (th < 0) throw InputError("negative threshold");
  th = std::min(th, g.node_count());
  double combos = 0.0;
  for (int i = 0; i <= th; ++i) combos += binomial(g.node_count(), i);
  if (combos > limits.max_combinations)
    throw LimitError("refusing enumeration: sum of C(n,i) for i<=" + std::to_string(th) +
                     " = " + std::to_string(combos) + " exceeds limit " +
                     std::to_string(limits.max_combinations));
  Enumerator e(g, th, /*smaller=*/true, limits.max_states);
  e.run(0, 0, StateSet(g.node_count()));
  return std::move(e.out);
}

int SpaceGraph::find_state(const StateSet& s) const {
  auto it = std::lower_bound(states.begin(), states.end(), s, StateSet::word_less);
  if (it != states.end() && *it == s) return static_cast<int>(it - states.begin());
  return -1;
}

std::vector<int32_t> SpaceGraph::bfs(int source) const {
  std::vector<int32_t> dist(states.size(), -1);
  std::deque<int32_t> queue;
  dist[static_cast<size_t>(source)] = 0;
  queue.push_back(static_cast<int32_t>(source));
  while (!queue.empty()) {
    int32_t u = queue.front();
    queue.pop_front();
    for (int32_t v : adj[static_cast<size_t>(u)]) {
      if (dist[static_cast<size_t>(v)] < 0) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

SpaceGraph build_solution_space(std::vector<StateSet> states, Rule rule, int threshold) {
  SpaceGraph sp;
  std::sort(states.begin(), states.end(), StateSet::word_less);
  states.erase(std::unique(states.begin(), states.end()), states.end());
  sp.states = std::move(states);
  size_t count = sp.states.size();
  sp.adj.assign(count, {});

  auto add_edge = [&](int32_t a, int32_t b) {
    sp.adj[static_cast<size_t>(a)].push_back(b);
    sp.adj[static_cast<size_t>(b)].push_back(a);
  };

  if (rule == Rule::TokenJumping) {
    // Two same-size states are TJ-adjacent iff they share a (k-1)-subset,
    // so bucket every state under each "state minus one member" key.
    std::unordered_map<StateSet, std::vector<int32_t>, StateSetHash> buckets;
    for (size_t i = 0; i < count; ++i) {
      const StateSet& s = sp.states[i];
      s.for_each([&](int v) {
        StateSet key = s;
        key.erase(v);
        buckets[key].push_back(static_cast<int32_t>(i));
      });
    }
    for (const auto& [key, members] : buckets)
      for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
          add_edge(members[a], members[b]);
  } else {
    // TAR-adjacent iff one state is the other minus a single member; sizes
    // in the list are already within the threshold.
    std::unordered_map<StateSet, int32_t, StateSetHash> index;
    index.reserve(count * 2);
    for (size_t i = 0; i < count; ++i) index.emplace(sp.states[i], static_cast<int32_t>(i));
    (void)threshold;
    for (size_t i = 0; i < count; ++i) {
      const StateSet& s = sp.states[i];
      s.for_each([&](int v) {
        StateSet smaller = s;
        smaller.erase(v);
        auto it = index.find(smaller);
        if (it != index.end()) add_edge(static_cast<int32_t>(i), it->second);
      });
    }
  }

  for (auto& nb : sp.adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  sp.component.assign(count, -1);
  int32_t comp = 0;
  for (size_t root = 0; root < count; ++root) {
    if (sp.component[root] >= 0) continue;
    std::deque<int32_t> queue{static_cast<int32_t>(root)};
    sp.component[root] = comp;
    while (!queue.empty()) {
      int32_t u = queue.front();
      queue.pop_front();
      for (int32_t v : sp.adj[static_cast<size_t>(u)])
        if (sp.component[static_cast<size_t>(v)] < 0) {
          sp.component[static_cast<size_t>(v)] = comp;
          queue.push_back(v);
        }
    }
    ++comp;
  }
  sp.component_count = comp;
  return sp;
}

SpaceGraph build_solution_space(const Graph& g, Rule rule, int k_or_th,
                                const OracleLimits& limits) {
  std::vector<StateSet> states = rule == Rule::TokenJumping
                                     ? enumerate_dominating_sets(g, k_or_th, limits)
                                     : enumerate_dominating_sets_up_to(g, k_or_th, limits);
  return build_solution_space(std::move(states), rule, k_or_th);
}

OracleAnswer oracle_reachability(const Instance& inst, const OracleLimits& limits) {
  int k_or_th =
      inst.rule == Rule::TokenJumping ? inst.token_count : inst.threshold;
  SpaceGraph space = build_solution_space(inst.graph, inst.rule, k_or_th, limits);
  int start = space.find_state(inst.start);
  int goal = space.find_state(inst.goal);
  if (start < 0 || goal < 0)
    throw InputError("start or goal state is not in the solution space");
  std::vector<int32_t> dist = space.bfs(start);
  int32_t d = dist[static_cast<size_t>(goal)];
  if (d < 0) return {Verdict::Unreachable, std::nullopt};
  return {Verdict::Reachable, static_cast<int>(d)};
}

}  // namespace recore
