#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "entplan/adjacency.hpp"
#include "entplan/csv_io.hpp"
#include "entplan/types.hpp"

namespace entplan {

// Synthetic rectangular-grid state: equal-weight cells, optional per-cell
// category fractions, and any number of labelings (districts, counties,
// tracts, plans). Cells are named r<row>c<col> in row-major order.
struct FixtureSpec {
  std::size_t width = 0;
  std::size_t height = 0;
  double cell_weight = 1.0;
  // Fraction of each cell's weight in the category, row-major; empty when
  // the fixture carries no demographic layer.
  std::vector<double> category_fractions;
  // role name -> per-cell labels, row-major
  std::map<std::string, std::vector<std::string>> partitions;
};

struct Fixture {
  std::string name;
  UniversePtr universe;  // grid cells, weights = cell totals
  std::map<std::string, LabeledPartition> partitions;
  AdjacencyGraph adjacency;  // rook (edge-sharing neighbors)
  WeightTable table;         // `pop`, or `total`+`minority` with fractions
};

Fixture build_fixture(const std::string& name, const FixtureSpec& spec);

// The built-in fixture catalog; names are part of the CLI contract.
std::vector<std::string> fixture_names();

// Errors: UnknownFixtureName.
Fixture make_fixture(const std::string& name);

// Writes <name>_weights.csv, <name>_<role>.csv per partition, and
// <name>_adjacency.csv into `directory`. Returns the paths written,
// sorted by filename.
std::vector<std::filesystem::path> write_fixture(
    const Fixture& fixture, const std::filesystem::path& directory);

}  // namespace entplan
