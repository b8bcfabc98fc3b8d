#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "recore/encode/encoder.hpp"
#include "recore/graph.hpp"
#include "recore/state_set.hpp"

namespace recore {

enum class OptStrategy {
  FromAbove,  // tighten a feasible upper bound until UNSAT
  FromBelow   // ask k = 1, 2, ... until SAT
};

// Iteratively picks the node covering the most still-uncovered nodes
// (ties to the lowest index). Always a dominating set; used as the anytime
// upper bound for minimization.
StateSet greedy_dominating_set(const Graph& g);

// A dominating set of size exactly k, or nullopt if none exists.
std::optional<StateSet> solve_decision_dsp(
    const Graph& g, int k,
    encode::EncodingVariant variant = encode::EncodingVariant::Base1);

struct MinimizeResult {
  int k = 0;
  StateSet witness;
  bool proven = false;
};

// Minimum dominating set size. On budget exhaustion returns the best known
// bound and witness with proven=false.
MinimizeResult minimize_dominating_set(
    const Graph& g, encode::EncodingVariant variant, OptStrategy strategy,
    double timeout_seconds = std::numeric_limits<double>::infinity());

struct EnumerateResult {
  std::vector<StateSet> sets;  // canonically ordered
  bool complete = false;
};

// All dominating sets of size exactly k (normally the proven optimum), up
// to cap, via repeated solving with per-solution blocking clauses; complete
// when the final solve is UNSAT within the cap.
EnumerateResult enumerate_optimal(
    const Graph& g, int k, int cap,
    encode::EncodingVariant variant = encode::EncodingVariant::Base1);

// All dominating sets of size at most the threshold (TAR state space), up
// to cap. Blocking clauses here exclude exactly the found set, not its
// supersets.
EnumerateResult enumerate_dominating_up_to(
    const Graph& g, int threshold, int cap,
    encode::EncodingVariant variant = encode::EncodingVariant::Base1);

}  // namespace recore
