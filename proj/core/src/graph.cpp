#include "recore/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace recore {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative node count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adj_.assign(static_cast<size_t>(n), {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  adj_closed_.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    StateSet closed(n);
    closed.insert(v);
    for (int u : adj_[static_cast<size_t>(v)]) closed.insert(u);
    max_closed_degree_ = std::max(max_closed_degree_, closed.cardinality());
    adj_closed_.push_back(std::move(closed));
  }
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool is_dominating(const Graph& g, const StateSet& s) {
  for (int v = 0; v < g.node_count(); ++v)
    if (!g.closed_neighborhood(v).intersects(s)) return false;
  return true;
}

}  // namespace recore
