#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "recore/encode/encoder.hpp"
#include "recore/graph.hpp"
#include "recore/instance.hpp"
#include "recore/state_set.hpp"

// Test-only helpers: graph fixtures, random generators, and independent
// brute-force oracles. Oracles here re-derive everything from first
// principles (edge lists and subset enumeration) so they share no code
// path with the library implementations they check.
namespace recore::test {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi);  // inclusive bounds

// --- fixtures -------------------------------------------------------------

// the worked 6-node, 8-edge example: edges 12,14,23,25,35,36,45,56
Graph demo_graph();
Instance demo_instance_tj();              // start {2,5}, goal {3,4}
Instance demo_instance_tar(int threshold);  // same endpoints under TAR

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // node 1 is the center
Graph complete_graph(int n);
Graph edgeless_graph(int n);

// gadget: two adjacent hubs a,b each adjacent to every peripheral node, so
// the gadget's minimum dominating sets are exactly {a} and {b}. A disjoint
// union of `count` gadgets has a hypercube-shaped optimal solution space.
Graph hub_gadget_union(int count, int gadget_size);

// 1-based labels, matching file formats and printed node ids.
StateSet nodes(int n, std::initializer_list<int> labels_1based);

// --- random generators ----------------------------------------------------

Graph random_connected_graph(Rng& rng, int n, double extra_edge_prob);
Graph random_graph(Rng& rng, int n, double edge_prob);  // possibly disconnected
StateSet random_subset(Rng& rng, int n);

// --- brute-force oracles ---------------------------------------------------

// direct double-loop domination check over the edge list
bool bf_is_dominating(const Graph& g, const StateSet& s);

// all dominating sets of size exactly k, via plain combination enumeration
std::vector<StateSet> bf_dominating_sets(const Graph& g, int k);

// all dominating sets of size at most th
std::vector<StateSet> bf_dominating_sets_up_to(const Graph& g, int th);

// minimum dominating set size by growing k
int bf_min_dominating_size(const Graph& g);

// BFS shortest reconfiguration distance over explicitly enumerated states;
// nullopt = unreachable
std::optional<int> bf_reconfig_distance(const Instance& inst);

// --- truth-table SAT oracle -------------------------------------------------

struct TtClause {
  std::vector<sat::Lit> lits;
};

// satisfiability over all 2^num_vars assignments (bit-parallel); assumptions
// are forced literals
bool tt_satisfiable(int num_vars, const std::vector<std::vector<sat::Lit>>& clauses,
                    const std::vector<sat::Lit>& assumptions = {});

// --- projected model enumeration via the engine -----------------------------

// All assignments of `projection` extendable to models of `clauses`,
// enumerated with blocking clauses over the projection. Variables must
// already exist in the solver that produced the clauses; this builds a
// fresh engine internally.
std::set<std::vector<bool>> enumerate_projections(
    int num_vars, const std::vector<std::vector<sat::Lit>>& clauses,
    const std::vector<sat::Lit>& projection);

}  // namespace recore::test
