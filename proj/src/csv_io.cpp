#include "entplan/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_map>

namespace entplan {

namespace {

std::string trim(std::string field) {
  const auto begin = field.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = field.find_last_not_of(" \t\r");
  return field.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

// All non-blank lines of a CSV file, split into fields.
std::vector<std::vector<std::string>> read_rows(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "'");
  }
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    rows.push_back(split_fields(line));
  }
  if (rows.empty()) {
    throw Error(ErrorKind::MalformedRow,
                "'" + path.string() + "' has no header row");
  }
  return rows;
}

double parse_weight(const std::string& field, const std::string& unit,
                    const std::filesystem::path& path) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw Error(ErrorKind::MalformedRow,
                "bad numeral '" + field + "' for unit '" + unit + "' in '" +
                    path.string() + "'");
  }
  return value;
}

std::string row_context(const std::filesystem::path& path, std::size_t row) {
  return "row " + std::to_string(row + 1) + " of '" + path.string() + "'";
}

}  // namespace

std::optional<std::size_t> WeightTable::column_index(
    const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  return std::nullopt;
}

WeightTable load_weight_table(const std::filesystem::path& path) {
  const auto rows = read_rows(path);
  const auto& header = rows.front();
  if (header.empty() || header[0] != "unit") {
    throw Error(ErrorKind::MalformedRow,
                "'" + path.string() + "' must start with a 'unit' column");
  }

  WeightTable table;
  table.columns.assign(header.begin() + 1, header.end());
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::MalformedRow,
                  "expected " + std::to_string(header.size()) +
                      " fields in " + row_context(path, r));
    }
    const std::string& unit = fields[0];
    if (unit.empty()) {
      throw Error(ErrorKind::MalformedRow,
                  "empty unit id in " + row_context(path, r));
    }
    if (!seen.emplace(unit, r).second) {
      throw Error(ErrorKind::DuplicateUnit,
                  "unit '" + unit + "' repeated in '" + path.string() + "'");
    }
    std::vector<double> values;
    values.reserve(table.columns.size());
    for (std::size_t c = 1; c < fields.size(); ++c) {
      const double value = parse_weight(fields[c], unit, path);
      if (value < 0.0) {
        throw Error(ErrorKind::NegativeWeight,
                    "unit '" + unit + "' has negative value in column '" +
                        table.columns[c - 1] + "'");
      }
      values.push_back(value);
    }
    table.unit_ids.push_back(unit);
    table.values.push_back(std::move(values));
  }
  return table;
}

UniversePtr universe_from_table(const WeightTable& table,
                                const std::string& column) {
  const auto index = table.column_index(column);
  if (!index) {
    throw Error(ErrorKind::MissingColumn, "no column named '" + column + "'");
  }
  std::vector<Unit> units;
  units.reserve(table.unit_ids.size());
  for (std::size_t r = 0; r < table.unit_ids.size(); ++r) {
    units.push_back(Unit{table.unit_ids[r], table.values[r][*index]});
  }
  return UnitUniverse::create(std::move(units));
}

UniversePtr load_weights(const std::filesystem::path& path,
                         const std::optional<std::string>& column) {
  const WeightTable table = load_weight_table(path);
  if (column) return universe_from_table(table, *column);
  if (table.columns.size() != 1) {
    throw Error(ErrorKind::MissingColumn,
                "'" + path.string() + "' has " +
                    std::to_string(table.columns.size()) +
                    " weight columns; name one with --weight-column");
  }
  return universe_from_table(table, table.columns[0]);
}

std::vector<std::pair<std::string, std::string>> read_assignment_rows(
    const std::filesystem::path& path) {
  const auto rows = read_rows(path);
  const auto& header = rows.front();
  if (header.size() != 2 || header[0] != "unit" || header[1] != "label") {
    throw Error(ErrorKind::MalformedRow,
                "'" + path.string() + "' must have header 'unit,label'");
  }
  std::vector<std::pair<std::string, std::string>> assignment;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorKind::MalformedRow,
                  "expected 'unit,label' in " + row_context(path, r));
    }
    if (!seen.emplace(fields[0], r).second) {
      throw Error(ErrorKind::DuplicateUnit, "unit '" + fields[0] +
                                                "' repeated in '" +
                                                path.string() + "'");
    }
    assignment.emplace_back(fields[0], fields[1]);
  }
  return assignment;
}

LabeledPartition partition_from_rows(
    UniversePtr universe,
    const std::vector<std::pair<std::string, std::string>>& rows) {
  std::unordered_map<std::string, std::string> assignment;
  assignment.reserve(rows.size());
  for (const auto& [unit, label] : rows) assignment.emplace(unit, label);
  return LabeledPartition::from_map(std::move(universe), assignment);
}

LabeledPartition load_assignment(const std::filesystem::path& path,
                                 UniversePtr universe) {
  return partition_from_rows(std::move(universe), read_assignment_rows(path));
}

std::vector<std::pair<std::string, std::string>> read_edge_rows(
    const std::filesystem::path& path) {
  const auto rows = read_rows(path);
  const auto& header = rows.front();
  if (header.size() != 2 || header[0] != "unit_a" || header[1] != "unit_b") {
    throw Error(ErrorKind::MalformedRow,
                "'" + path.string() + "' must have header 'unit_a,unit_b'");
  }
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r];
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorKind::MalformedRow,
                  "expected 'unit_a,unit_b' in " + row_context(path, r));
    }
    edges.emplace_back(fields[0], fields[1]);
  }
  return edges;
}

AdjacencyGraph load_adjacency(const std::filesystem::path& path,
                              UniversePtr universe) {
  return AdjacencyGraph::build(std::move(universe), read_edge_rows(path));
}

UniversePtr restrict_universe(const UnitUniverse& universe,
                              const std::unordered_set<std::string>& keep) {
  std::vector<Unit> units;
  units.reserve(keep.size());
  for (const Unit& unit : universe.units()) {
    if (keep.contains(unit.id)) units.push_back(unit);
  }
  return UnitUniverse::create(std::move(units));
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
  }
  return out;
}

// Shortest representation that round-trips; integers print bare.
std::string format_weight(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

}  // namespace

void write_assignment(const std::filesystem::path& path,
                      const LabeledPartition& partition) {
  auto out = open_for_write(path);
  out << "unit,label\n";
  const auto& units = partition.universe()->units();
  for (std::size_t i = 0; i < units.size(); ++i) {
    out << units[i].id << ',' << partition.label(i) << '\n';
  }
}

void write_weight_table(const std::filesystem::path& path,
                        const WeightTable& table) {
  auto out = open_for_write(path);
  out << "unit";
  for (const std::string& column : table.columns) out << ',' << column;
  out << '\n';
  for (std::size_t r = 0; r < table.unit_ids.size(); ++r) {
    out << table.unit_ids[r];
    for (double value : table.values[r]) out << ',' << format_weight(value);
    out << '\n';
  }
}

void write_adjacency(const std::filesystem::path& path,
                     const AdjacencyGraph& graph) {
  auto out = open_for_write(path);
  out << "unit_a,unit_b\n";
  const auto& units = graph.universe()->units();
  for (const auto& [a, b] : graph.edges()) {
    out << units[a].id << ',' << units[b].id << '\n';
  }
}

Bipartition bipartition_by_threshold(const WeightTable& table,
                                     const std::string& category_column,
                                     const std::string& total_column) {
  const auto category = table.column_index(category_column);
  if (!category) {
    throw Error(ErrorKind::MissingColumn,
                "no column named '" + category_column + "'");
  }
  const auto total = table.column_index(total_column);
  if (!total) {
    throw Error(ErrorKind::MissingColumn,
                "no column named '" + total_column + "'");
  }

  std::vector<Unit> units;
  std::vector<std::string> category_labels;
  std::vector<std::string> source_labels;
  units.reserve(2 * table.unit_ids.size());
  for (std::size_t r = 0; r < table.unit_ids.size(); ++r) {
    const std::string& id = table.unit_ids[r];
    const double in_category = table.values[r][*category];
    const double all = table.values[r][*total];
    if (in_category > all) {
      throw Error(ErrorKind::CategoryExceedsTotal,
                  "unit '" + id + "': category " + format_weight(in_category) +
                      " exceeds total " + format_weight(all));
    }
    units.push_back(Unit{id + "#in", in_category});
    units.push_back(Unit{id + "#out", all - in_category});
    category_labels.insert(category_labels.end(), {"in", "out"});
    source_labels.insert(source_labels.end(), {id, id});
  }

  UniversePtr universe = UnitUniverse::create(std::move(units));
  return Bipartition{
      universe,
      LabeledPartition(universe, std::move(category_labels)),
      LabeledPartition(universe, std::move(source_labels)),
  };
}

}  // namespace entplan
