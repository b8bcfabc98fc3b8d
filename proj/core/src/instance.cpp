#include "recore/instance.hpp"

#include <algorithm>

namespace recore {

std::string to_string(Rule rule) {
  return rule == Rule::TokenJumping ? "tj" : "tar";
}

bool adjacency_check(Rule rule, int threshold, const StateSet& s, const StateSet& s2) {
  if (rule == Rule::TokenJumping)
    return s.difference_size(s2) == 1 && s2.difference_size(s) == 1;
  return s.symmetric_difference_size(s2) == 1 &&
         std::max(s.cardinality(), s2.cardinality()) <= threshold;
}

Instance make_instance(Graph graph, StateSet start, StateSet goal, Rule rule,
                       std::optional<int> threshold) {
  if (start.universe_size() != graph.node_count() ||
      goal.universe_size() != graph.node_count())
    throw InputError("state universe does not match graph node count");

  Instance inst;
  if (rule == Rule::TokenJumping) {
    if (threshold.has_value())
      throw InputError("threshold is only valid under token addition-removal");
    if (start.cardinality() != goal.cardinality())
      throw InputError("token jumping requires |start| = |goal|, got " +
                       std::to_string(start.cardinality()) + " and " +
                       std::to_string(goal.cardinality()));
    inst.token_count = start.cardinality();
  } else {
    if (!threshold.has_value())
      throw InputError("token addition-removal requires a threshold");
    if (*threshold < 0) throw InputError("threshold must be nonnegative");
    if (start.cardinality() > *threshold || goal.cardinality() > *threshold)
      throw InputError("state exceeds token threshold " + std::to_string(*threshold));
    inst.threshold = *threshold;
  }

  if (!is_dominating(graph, start))
    throw InputError("start state is not a dominating set");
  if (!is_dominating(graph, goal))
    throw InputError("goal state is not a dominating set");

  inst.graph = std::move(graph);
  inst.start = std::move(start);
  inst.goal = std::move(goal);
  inst.rule = rule;
  return inst;
}

}  // namespace recore
