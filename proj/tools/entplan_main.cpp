#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "entplan/csv_io.hpp"
#include "entplan/distance_matrix.hpp"
#include "entplan/entropy.hpp"
#include "entplan/errors.hpp"
#include "entplan/fixtures.hpp"
#include "entplan/mds.hpp"
#include "entplan/outliers.hpp"
#include "entplan/scores.hpp"
#include "entplan/types.hpp"

namespace fs = std::filesystem;
using namespace entplan;

namespace {

// Fixed-point decimal with the glibc default half-even rounding. The sign
// is dropped when rounding leaves no nonzero digit, so -0.000 never prints.
std::string format_fixed(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
  std::string text(buffer);
  if (!text.empty() && text[0] == '-' &&
      text.find_first_of("123456789") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

std::string json_quote(const std::string& raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

void write_text(const fs::path& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
  }
  out << body;
}

// Scalar reports go to stdout, or to --out when given.
void emit_report(const std::string& line, const std::optional<std::string>& out) {
  if (out) {
    write_text(*out, line + "\n");
  } else {
    std::cout << line << '\n';
  }
}

std::unordered_set<std::string> id_set(
    const std::vector<std::pair<std::string, std::string>>& rows) {
  std::unordered_set<std::string> ids;
  ids.reserve(rows.size());
  for (const auto& [unit, label] : rows) ids.insert(unit);
  return ids;
}

WeightTable filter_table(const WeightTable& table,
                         const std::unordered_set<std::string>& keep) {
  WeightTable out;
  out.columns = table.columns;
  for (std::size_t r = 0; r < table.unit_ids.size(); ++r) {
    if (!keep.contains(table.unit_ids[r])) continue;
    out.unit_ids.push_back(table.unit_ids[r]);
    out.values.push_back(table.values[r]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> filter_rows(
    const std::vector<std::pair<std::string, std::string>>& rows,
    const std::unordered_set<std::string>& keep) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (keep.contains(row.first)) out.push_back(row);
  }
  return out;
}

// Options shared by every scoring subcommand.
struct CommonOptions {
  std::string weights_path;
  std::optional<std::string> weight_column;
  int precision = 3;
  bool intersect = false;
  std::optional<std::string> out;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_weights = true) {
  auto* weights = cmd->add_option("--weights", opts.weights_path,
                                  "Unit weight CSV (header unit,<col>...)");
  if (needs_weights) weights->required();
  cmd->add_option("--weight-column", opts.weight_column,
                  "Weight column to use (required when the file has several)");
  cmd->add_option("--precision", opts.precision,
                  "Decimal places in reports (default 3)")
      ->check(CLI::Range(1, 15));
  cmd->add_flag("--intersect", opts.intersect,
                "Restrict to units present in every input instead of erroring");
  cmd->add_option("--out", opts.out, "Write the report here instead of stdout");
}

// Weights plus any number of assignment files, reconciled onto one
// universe. Strict by default: every assignment must cover the universe
// exactly. With --intersect, all inputs are first cut down to their
// common unit ids.
struct Reconciled {
  UniversePtr universe;
  std::vector<LabeledPartition> partitions;
  std::unordered_set<std::string> kept;  // unit ids in the universe
};

Reconciled reconcile(const CommonOptions& opts,
                     const std::vector<std::string>& assignment_paths) {
  WeightTable table = load_weight_table(opts.weights_path);
  std::vector<std::vector<std::pair<std::string, std::string>>> row_lists;
  row_lists.reserve(assignment_paths.size());
  for (const auto& path : assignment_paths) {
    row_lists.push_back(read_assignment_rows(path));
  }

  std::unordered_set<std::string> keep(table.unit_ids.begin(),
                                       table.unit_ids.end());
  if (opts.intersect) {
    for (const auto& rows : row_lists) {
      const auto ids = id_set(rows);
      std::erase_if(keep, [&](const std::string& id) { return !ids.contains(id); });
    }
    table = filter_table(table, keep);
    for (auto& rows : row_lists) rows = filter_rows(rows, keep);
  }

  std::string column;
  if (opts.weight_column) {
    column = *opts.weight_column;
  } else if (table.columns.size() == 1) {
    column = table.columns[0];
  } else {
    throw Error(ErrorKind::MissingColumn,
                "'" + opts.weights_path + "' has " +
                    std::to_string(table.columns.size()) +
                    " weight columns; name one with --weight-column");
  }

  Reconciled result;
  result.universe = universe_from_table(table, column);
  result.kept = std::move(keep);
  for (const auto& rows : row_lists) {
    result.partitions.push_back(partition_from_rows(result.universe, rows));
  }
  return result;
}

void run_entropy(const CommonOptions& opts, const std::string& assignment) {
  auto rec = reconcile(opts, {assignment});
  const double bits = entropy_bits(MarginalDistribution::of(rec.partitions[0]));
  emit_report("{\"entropy_bits\": " + format_fixed(bits, opts.precision) + "}",
              opts.out);
}

void run_seg(const CommonOptions& opts, const std::string& tract_assignment,
             const std::string& category_column,
             const std::string& total_column) {
  WeightTable table = load_weight_table(opts.weights_path);
  auto rows = read_assignment_rows(tract_assignment);
  if (opts.intersect) {
    std::unordered_set<std::string> keep(table.unit_ids.begin(),
                                         table.unit_ids.end());
    const auto ids = id_set(rows);
    std::erase_if(keep, [&](const std::string& id) { return !ids.contains(id); });
    table = filter_table(table, keep);
    rows = filter_rows(rows, keep);
  }

  // Validate the tract labels against the table's units (both directions)
  // before moving down to pseudo-units.
  auto source_universe = universe_from_table(table, total_column);
  auto tracts = partition_from_rows(source_universe, rows);
  std::unordered_map<std::string, std::string> tract_of;
  tract_of.reserve(rows.size());
  for (const auto& [unit, label] : rows) tract_of.emplace(unit, label);

  auto split = bipartition_by_threshold(table, category_column, total_column);
  auto regions = relabel_partition(split.source_unit, tract_of);
  const auto result = segregation_score(split.category, regions);
  emit_report("{\"seg\": " + format_fixed(result.seg, opts.precision) +
                  ", \"ent_conditional\": " +
                  format_fixed(result.ent_conditional, opts.precision) +
                  ", \"ent_marginal\": " +
                  format_fixed(result.ent_marginal, opts.precision) + "}",
              opts.out);
}

void run_county_split(const CommonOptions& opts, const std::string& districts,
                      const std::string& counties,
                      const std::optional<std::string>& adjacency,
                      bool count_zero_weight) {
  auto rec = reconcile(opts, {districts, counties});
  std::optional<AdjacencyGraph> graph;
  if (adjacency) {
    auto edges = read_edge_rows(*adjacency);
    if (opts.intersect) {
      std::erase_if(edges, [&](const auto& edge) {
        return !rec.kept.contains(edge.first) || !rec.kept.contains(edge.second);
      });
    }
    graph = AdjacencyGraph::build(rec.universe, edges);
  }
  const auto report =
      county_split_report(rec.partitions[0], rec.partitions[1],
                          graph ? &*graph : nullptr, count_zero_weight);
  std::string line =
      "{\"entropy_bits\": " + format_fixed(report.entropy_bits, opts.precision) +
      ", \"splits\": " + std::to_string(report.splits) + ", \"pieces\": ";
  line += report.pieces ? std::to_string(*report.pieces) : "null";
  line += "}";
  emit_report(line, opts.out);
}

void run_distance(const CommonOptions& opts, const std::string& plan_a,
                  const std::string& plan_b) {
  auto rec = reconcile(opts, {plan_a, plan_b});
  const double bits = plan_distance_bits(rec.partitions[0], rec.partitions[1]);
  emit_report("{\"distance_bits\": " + format_fixed(bits, opts.precision) + "}",
              opts.out);
}

std::vector<fs::path> list_plan_files(const std::string& plan_dir) {
  std::error_code ec;
  fs::directory_iterator it(plan_dir, ec);
  if (ec) {
    throw Error(ErrorKind::IoError,
                "cannot read directory '" + plan_dir + "': " + ec.message());
  }
  std::vector<fs::path> files;
  for (const auto& entry : it) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

void run_embed(const CommonOptions& opts, const std::string& plan_dir,
               const std::vector<std::string>& flagged_names) {
  const auto files = list_plan_files(plan_dir);
  if (files.size() < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "'" + plan_dir + "' holds " + std::to_string(files.size()) +
                    " plan CSVs; need at least 2");
  }
  std::vector<std::string> plan_ids, paths;
  for (const auto& file : files) {
    plan_ids.push_back(file.stem().string());
    paths.push_back(file.string());
  }

  auto rec = reconcile(opts, paths);
  auto dm = pairwise_distances(rec.partitions, plan_ids);
  auto embedding = classical_mds(dm);
  if (embedding.degenerate) {
    std::cerr << "warning: all pairwise distances are zero; "
                 "every plan embeds at the origin\n";
  }

  std::vector<std::size_t> flagged_indices;
  for (const auto& name : flagged_names) {
    const auto found = std::find(plan_ids.begin(), plan_ids.end(), name);
    if (found == plan_ids.end()) {
      throw Error(ErrorKind::InvalidArgument,
                  "--flag '" + name + "' matches no plan file in '" +
                      plan_dir + "'");
    }
    flagged_indices.push_back(
        static_cast<std::size_t>(found - plan_ids.begin()));
  }
  const auto summary = outlier_summary(dm, flagged_indices);

  const fs::path out_dir = opts.out.value_or(".");
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw Error(ErrorKind::IoError, "cannot create directory '" +
                                        out_dir.string() + "': " + ec.message());
  }

  const int p = opts.precision;
  std::string embedding_csv = "plan_id,x,y,mean_distance,rank\n";
  for (std::size_t i = 0; i < dm.size(); ++i) {
    embedding_csv += plan_ids[i] + ',' +
                     format_fixed(embedding.coordinates[i][0], p) + ',' +
                     format_fixed(embedding.coordinates[i][1], p) + ',' +
                     format_fixed(summary.plans[i].mean_distance, p) + ',' +
                     std::to_string(summary.plans[i].rank) + '\n';
  }
  std::string matrix_csv = "plan_id";
  for (const auto& id : plan_ids) matrix_csv += ',' + id;
  matrix_csv += '\n';
  for (std::size_t a = 0; a < dm.size(); ++a) {
    matrix_csv += plan_ids[a];
    for (std::size_t b = 0; b < dm.size(); ++b) {
      matrix_csv += ',' + format_fixed(dm.at(a, b), p);
    }
    matrix_csv += '\n';
  }
  const fs::path embedding_path = out_dir / "embedding.csv";
  const fs::path matrix_path = out_dir / "distances.csv";
  write_text(embedding_path, embedding_csv);
  write_text(matrix_path, matrix_csv);

  std::string line = "{\"plans\": " + std::to_string(dm.size()) +
                     ", \"eigenvalue_1\": " + format_fixed(embedding.eigenvalue_1, p) +
                     ", \"eigenvalue_2\": " + format_fixed(embedding.eigenvalue_2, p) +
                     ", \"negative_eigenvalues\": " +
                     std::to_string(embedding.negative_eigenvalue_count) +
                     ", \"degenerate\": ";
  line += embedding.degenerate ? "true" : "false";
  line += ", \"embedding\": " + json_quote(embedding_path.string()) +
          ", \"distances\": " + json_quote(matrix_path.string()) +
          ", \"flagged\": [";
  for (std::size_t i = 0; i < summary.flagged.size(); ++i) {
    if (i) line += ", ";
    const auto& plan = summary.flagged[i];
    line += "{\"plan_id\": " + json_quote(plan.plan_id) +
            ", \"mean_distance\": " + format_fixed(plan.mean_distance, p) +
            ", \"rank\": " + std::to_string(plan.rank) + "}";
  }
  line += "]}";
  std::cout << line << '\n';
}

void run_fixtures(const std::string& name, bool list,
                  const std::string& out_dir) {
  if (list) {
    std::string line = "{\"fixtures\": [";
    const auto names = fixture_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) line += ", ";
      line += json_quote(names[i]);
    }
    line += "]}";
    std::cout << line << '\n';
    return;
  }
  if (name.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "give a fixture name, or --list to see them all");
  }
  const auto fixture = make_fixture(name);
  const auto written = write_fixture(fixture, out_dir);
  std::string line = "{\"written\": [";
  for (std::size_t i = 0; i < written.size(); ++i) {
    if (i) line += ", ";
    line += json_quote(written[i].string());
  }
  line += "]}";
  std::cout << line << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy scores for districting plans and demographic data"};
  app.require_subcommand(1);

  auto* entropy_cmd = app.add_subcommand(
      "entropy", "Bits needed to name a random person's part");
  CommonOptions entropy_opts;
  std::string entropy_assignment;
  entropy_cmd->add_option("assignment", entropy_assignment,
                          "Partition CSV (header unit,label)")
      ->required();
  add_common(entropy_cmd, entropy_opts);
  entropy_cmd->callback(
      [&] { run_entropy(entropy_opts, entropy_assignment); });

  auto* seg_cmd = app.add_subcommand(
      "seg", "Segregation score of a demographic category across tracts");
  CommonOptions seg_opts;
  std::string seg_assignment, seg_category = "minority", seg_total = "total";
  seg_cmd->add_option("tracts", seg_assignment,
                      "Tract assignment CSV (header unit,label)")
      ->required();
  add_common(seg_cmd, seg_opts);
  seg_cmd->add_option("--category-column", seg_category,
                      "Category count column (default minority)");
  seg_cmd->add_option("--total-column", seg_total,
                      "Total population column (default total)");
  seg_cmd->callback(
      [&] { run_seg(seg_opts, seg_assignment, seg_category, seg_total); });

  auto* split_cmd = app.add_subcommand(
      "county-split", "How much a districting plan splits counties");
  CommonOptions split_opts;
  std::string split_districts, split_counties;
  std::optional<std::string> split_adjacency;
  bool split_zero_weight = false;
  split_cmd->add_option("districts", split_districts, "District assignment CSV")
      ->required();
  split_cmd->add_option("counties", split_counties, "County assignment CSV")
      ->required();
  add_common(split_cmd, split_opts);
  split_cmd->add_option("--adjacency", split_adjacency,
                        "Edge list CSV (header unit_a,unit_b); enables pieces");
  split_cmd->add_flag("--count-zero-weight", split_zero_weight,
                      "Count zero-weight units when tallying split counties");
  split_cmd->callback([&] {
    run_county_split(split_opts, split_districts, split_counties,
                     split_adjacency, split_zero_weight);
  });

  auto* distance_cmd = app.add_subcommand(
      "distance", "Symmetrized conditional-entropy distance between two plans");
  CommonOptions distance_opts;
  std::string distance_a, distance_b;
  distance_cmd->add_option("plan_a", distance_a, "First plan CSV")->required();
  distance_cmd->add_option("plan_b", distance_b, "Second plan CSV")->required();
  add_common(distance_cmd, distance_opts);
  distance_cmd->callback(
      [&] { run_distance(distance_opts, distance_a, distance_b); });

  auto* embed_cmd = app.add_subcommand(
      "embed", "2D embedding and outlier ranks for a directory of plans");
  CommonOptions embed_opts;
  std::string embed_dir;
  std::vector<std::string> embed_flags;
  embed_cmd->add_option("plan_dir", embed_dir,
                        "Directory of plan CSVs (one per plan)")
      ->required();
  add_common(embed_cmd, embed_opts);
  embed_cmd->add_option("--flag", embed_flags,
                        "Plan name whose rank to report (repeatable)");
  embed_cmd->callback([&] { run_embed(embed_opts, embed_dir, embed_flags); });

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "Write a built-in example dataset");
  std::string fixtures_name, fixtures_out = ".";
  bool fixtures_list = false;
  fixtures_cmd->add_option("name", fixtures_name, "Fixture name");
  fixtures_cmd->add_flag("--list", fixtures_list, "List fixture names");
  fixtures_cmd->add_option("--out", fixtures_out,
                           "Directory to write into (default .)");
  fixtures_cmd->callback(
      [&] { run_fixtures(fixtures_name, fixtures_list, fixtures_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
