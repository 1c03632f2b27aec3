#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "entplan/adjacency.hpp"
#include "entplan/types.hpp"

namespace entplan {

// Census-style unit rows with named nonnegative weight columns.
// CSV schema: header `unit,<col>...`, decimal numerals, dot separator,
// no commas inside fields.
struct WeightTable {
  std::vector<std::string> columns;  // weight column names, file order
  std::vector<std::string> unit_ids;
  std::vector<std::vector<double>> values;  // [row][column]

  std::optional<std::size_t> column_index(const std::string& name) const;
};

WeightTable load_weight_table(const std::filesystem::path& path);

// Universe from one weight column, rows in file order. When `column` is
// empty, the file must have exactly one weight column.
// Errors: MissingColumn, NegativeWeight, ZeroTotalWeight, plus the CSV
// schema errors.
UniversePtr load_weights(const std::filesystem::path& path,
                         const std::optional<std::string>& column = {});
UniversePtr universe_from_table(const WeightTable& table,
                                const std::string& column);

// Raw `unit,label` rows. Errors: DuplicateUnit, MalformedRow, IoError.
std::vector<std::pair<std::string, std::string>> read_assignment_rows(
    const std::filesystem::path& path);

// Strict reconciliation of rows against a universe: every row's unit must
// exist (UnknownUnit) and every universe unit must get a label
// (MissingLabel).
LabeledPartition partition_from_rows(
    UniversePtr universe,
    const std::vector<std::pair<std::string, std::string>>& rows);

LabeledPartition load_assignment(const std::filesystem::path& path,
                                 UniversePtr universe);

// Raw `unit_a,unit_b` rows, unvalidated against any universe.
std::vector<std::pair<std::string, std::string>> read_edge_rows(
    const std::filesystem::path& path);

// Edge-list CSV with header `unit_a,unit_b`; deduplicated, undirected.
AdjacencyGraph load_adjacency(const std::filesystem::path& path,
                              UniversePtr universe);

// Sub-universe keeping only the listed unit ids, preserving unit order.
UniversePtr restrict_universe(const UnitUniverse& universe,
                              const std::unordered_set<std::string>& keep);

void write_assignment(const std::filesystem::path& path,
                      const LabeledPartition& partition);
void write_weight_table(const std::filesystem::path& path,
                        const WeightTable& table);
void write_adjacency(const std::filesystem::path& path,
                     const AdjacencyGraph& graph);

struct Bipartition {
  UniversePtr universe;         // two pseudo-units per source unit
  LabeledPartition category;    // "in" / "out"
  LabeledPartition source_unit; // pseudo-unit -> its source unit id
};

// Splits each unit into in-category and out-of-category pseudo-units so
// the one entropy engine also computes demographic segregation. Weight is
// conserved exactly: in + out = total per unit.
// Errors: CategoryExceedsTotal naming the offending unit; MissingColumn.
Bipartition bipartition_by_threshold(const WeightTable& table,
                                     const std::string& category_column,
                                     const std::string& total_column);

}  // namespace entplan
