#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "entplan/types.hpp"

namespace entplan {

// Undirected unit-adjacency graph over a universe. Needed only by the
// pieces score; isolated units are fine.
class AdjacencyGraph {
 public:
  // Validates endpoints against the universe, rejects self-loops, and
  // deduplicates (a,b)/(b,a).
  static AdjacencyGraph build(
      UniversePtr universe,
      const std::vector<std::pair<std::string, std::string>>& edges);

  const UniversePtr& universe() const { return universe_; }
  // Unique edges as index pairs with first < second, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::vector<std::size_t>>& neighbors() const {
    return neighbors_;
  }

 private:
  UniversePtr universe_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

}  // namespace entplan
