#pragma once

// Deterministic random inputs for property tests. Every generator takes the
// engine by reference so a test controls its own seed and sequence.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "entplan/contingency.hpp"
#include "entplan/types.hpp"

namespace entplan::testing {

inline std::vector<std::string> numbered_labels(const std::string& prefix, int count) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

// A normalized contingency table with random positive cells; a few cells are
// zeroed to exercise the 0 * log(1/0) = 0 convention.
inline ContingencyTable random_table(std::mt19937& rng, int max_rows = 20,
                                     int max_cols = 20) {
  std::uniform_int_distribution<int> dim(1, max_rows);
  std::uniform_int_distribution<int> dim_c(1, max_cols);
  const int rows = dim(rng);
  const int cols = dim_c(rng);
  std::uniform_real_distribution<double> cell(0.0, 1.0);
  std::bernoulli_distribution drop(0.2);
  std::vector<double> masses(static_cast<std::size_t>(rows) * cols, 0.0);
  double total = 0.0;
  for (double& m : masses) {
    if (drop(rng)) continue;
    m = cell(rng);
    total += m;
  }
  if (total <= 0.0) {
    masses[0] = 1.0;
    total = 1.0;
  }
  for (double& m : masses) m /= total;
  return ContingencyTable::from_masses(numbered_labels("r", rows),
                                       numbered_labels("c", cols), masses);
}

inline UniversePtr random_universe(std::mt19937& rng, int units) {
  std::uniform_real_distribution<double> weight(0.5, 10.0);
  std::vector<Unit> list;
  list.reserve(static_cast<std::size_t>(units));
  for (int i = 0; i < units; ++i) list.push_back({"u" + std::to_string(i), weight(rng)});
  return UnitUniverse::create(std::move(list));
}

inline LabeledPartition random_partition(std::mt19937& rng, const UniversePtr& universe,
                                         int parts) {
  std::uniform_int_distribution<int> pick(0, parts - 1);
  std::vector<std::string> labels;
  labels.reserve(universe->size());
  for (std::size_t u = 0; u < universe->size(); ++u)
    labels.push_back("p" + std::to_string(pick(rng)));
  return LabeledPartition(universe, std::move(labels));
}

// Each of the k parts receives exactly size units; the universe must carry
// equal weights for such a plan to be balanced.
inline LabeledPartition balanced_partition(std::mt19937& rng, const UniversePtr& universe,
                                           int parts) {
  const std::size_t n = universe->size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::string> labels(n);
  const std::size_t size = n / static_cast<std::size_t>(parts);
  for (std::size_t i = 0; i < n; ++i)
    labels[order[i]] = "d" + std::to_string(std::min<std::size_t>(i / size,
        static_cast<std::size_t>(parts) - 1));
  return LabeledPartition(universe, std::move(labels));
}

inline std::vector<std::pair<double, double>> random_points(std::mt19937& rng,
                                                            int count) {
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::vector<std::pair<double, double>> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) points.emplace_back(coord(rng), coord(rng));
  return points;
}

// A width x height rook grid with unit weights, row-major unit order. Used by
// county-splitting property tests that need real adjacency.
struct GridWorld {
  int width = 0;
  int height = 0;
  UniversePtr universe;
  std::vector<std::pair<std::string, std::string>> edges;
};

inline GridWorld unit_grid(int width, int height) {
  GridWorld world;
  world.width = width;
  world.height = height;
  std::vector<Unit> units;
  const auto id = [&](int row, int col) {
    return "r" + std::to_string(row) + "c" + std::to_string(col);
  };
  for (int row = 0; row < height; ++row)
    for (int col = 0; col < width; ++col) units.push_back({id(row, col), 1.0});
  world.universe = UnitUniverse::create(std::move(units));
  for (int row = 0; row < height; ++row) {
    for (int col = 0; col < width; ++col) {
      if (col + 1 < width) world.edges.emplace_back(id(row, col), id(row, col + 1));
      if (row + 1 < height) world.edges.emplace_back(id(row, col), id(row + 1, col));
    }
  }
  return world;
}

}  // namespace entplan::testing
