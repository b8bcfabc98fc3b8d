#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "recore/errors.hpp"
#include "recore/graph.hpp"
#include "recore/instance.hpp"
#include "recore/reach.hpp"
#include "recore/state_set.hpp"

namespace recore {

struct OracleLimits {
  // Refuse brute-force enumeration when the number of candidate subsets
  // (C(n,k), or the sum over sizes <= th) exceeds this.
  double max_combinations = 5e6;
  // Refuse to build spaces with more states than this.
  int64_t max_states = 2'000'000;
};

// All size-k dominating sets by lexicographic subset enumeration, pruning a
// partial set once the uncovered nodes exceed remaining picks times the
// maximum closed-neighborhood size. Throws LimitError instead of silently
// truncating.
std::vector<StateSet> enumerate_dominating_sets(const Graph& g, int k,
                                                const OracleLimits& limits = {});

// All dominating sets of size at most th (the TAR state space).
std::vector<StateSet> enumerate_dominating_sets_up_to(const Graph& g, int th,
                                                      const OracleLimits& limits = {});

// Explicit solution space: one node per state, edges under the adjacency
// rule, connected components labeled.
struct SpaceGraph {
  std::vector<StateSet> states;  // canonically ordered
  std::vector<std::vector<int32_t>> adj;
  std::vector<int32_t> component;
  int32_t component_count = 0;

  int find_state(const StateSet& s) const;  // index, or -1
  std::vector<int32_t> bfs(int source) const;  // distances, -1 unreachable
};

SpaceGraph build_solution_space(std::vector<StateSet> states, Rule rule, int threshold);
SpaceGraph build_solution_space(const Graph& g, Rule rule, int k_or_th,
                                const OracleLimits& limits = {});

struct OracleAnswer {
  Verdict verdict = Verdict::Unknown;
  std::optional<int> shortest;  // REACHABLE only
};

// Ground-truth reachability by BFS over the explicit solution space.
OracleAnswer oracle_reachability(const Instance& inst, const OracleLimits& limits = {});

}  // namespace recore
