#pragma once

#include <span>
#include <utility>
#include <vector>

#include "recore/state_set.hpp"

namespace recore {

// Undirected simple graph over nodes [0, n). Construction normalizes the
// edge list (endpoints ordered, duplicates merged) and rejects self-loops
// and out-of-range endpoints. Immutable afterwards.
class Graph {
 public:
  Graph() = default;

  // Endpoints are 0-based. Throws std::invalid_argument on a self-loop or
  // an endpoint outside [0, n).
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const int> neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

  // N[v] = {v} ∪ N(v)
  const StateSet& closed_neighborhood(int v) const { return adj_closed_[static_cast<size_t>(v)]; }

  // max |N[v]| over all nodes; 0 on the empty graph
  int max_closed_degree() const { return max_closed_degree_; }

  // Normalized edge list: first < second, ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<StateSet> adj_closed_;
  int max_closed_degree_ = 0;
};

// True iff every node's closed neighborhood intersects s, i.e. the closed
// neighborhoods of s cover all nodes.
bool is_dominating(const Graph& g, const StateSet& s);

}  // namespace recore
