#pragma once

#include <optional>
#include <string>

#include "recore/errors.hpp"
#include "recore/graph.hpp"
#include "recore/state_set.hpp"

namespace recore {

enum class Rule {
  TokenJumping,         // one token jumps anywhere per transition
  TokenAdditionRemoval  // one token added or removed, count bounded by threshold
};

std::string to_string(Rule rule);

// TJ: exactly one token left s and exactly one entered.
// TAR: symmetric difference is a single node and both counts stay <= threshold.
// Symmetric in (s, s2). `threshold` is ignored under TJ.
bool adjacency_check(Rule rule, int threshold, const StateSet& s, const StateSet& s2);

// A reconfiguration problem: graph, endpoint states, adjacency rule and its
// size parameter. Built through make_instance, which enforces the load-time
// invariants (endpoint domination, size constraints).
struct Instance {
  Graph graph;
  StateSet start;
  StateSet goal;
  Rule rule = Rule::TokenJumping;
  int token_count = 0;  // TJ: k, inferred as |start|
  int threshold = 0;    // TAR only
};

// Throws InputError on: non-dominating endpoints; |start| != |goal| under TJ;
// missing or violated threshold under TAR; threshold given under TJ.
Instance make_instance(Graph graph, StateSet start, StateSet goal, Rule rule,
                       std::optional<int> threshold = std::nullopt);

}  // namespace recore
