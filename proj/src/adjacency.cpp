#include "entplan/adjacency.hpp"

#include <algorithm>

namespace entplan {

AdjacencyGraph AdjacencyGraph::build(
    UniversePtr universe,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  if (!universe) {
    throw Error(ErrorKind::InvalidArgument, "graph requires a universe");
  }
  AdjacencyGraph graph;
  graph.universe_ = std::move(universe);
  graph.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const auto ia = graph.universe_->index_of(a);
    if (!ia) {
      throw Error(ErrorKind::UnknownUnit,
                  "edge endpoint '" + a + "' is not in the universe");
    }
    const auto ib = graph.universe_->index_of(b);
    if (!ib) {
      throw Error(ErrorKind::UnknownUnit,
                  "edge endpoint '" + b + "' is not in the universe");
    }
    if (*ia == *ib) {
      throw Error(ErrorKind::SelfLoop, "self-loop on unit '" + a + "'");
    }
    graph.edges_.emplace_back(std::min(*ia, *ib), std::max(*ia, *ib));
  }
  std::sort(graph.edges_.begin(), graph.edges_.end());
  graph.edges_.erase(std::unique(graph.edges_.begin(), graph.edges_.end()),
                     graph.edges_.end());

  graph.neighbors_.resize(graph.universe_->size());
  for (const auto& [a, b] : graph.edges_) {
    graph.neighbors_[a].push_back(b);
    graph.neighbors_[b].push_back(a);
  }
  return graph;
}

}  // namespace entplan
