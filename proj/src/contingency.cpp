#include "entplan/contingency.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "entplan/numeric.hpp"

namespace entplan {

ContingencyTable ContingencyTable::build(const LabeledPartition& x,
                                         const LabeledPartition& y) {
  const UnitUniverse& universe = *x.universe();
  const UnitUniverse& y_universe = *y.universe();

  // Accept the same universe object, an identical copy, or a permutation
  // of it; anything else (differing ids or weights) is a mismatch.
  const bool direct = same_universe(universe, y_universe);
  std::vector<std::size_t> y_position;
  if (!direct) {
    if (universe.size() != y_universe.size()) {
      throw Error(ErrorKind::UniverseMismatch,
                  "universes have different unit counts");
    }
    y_position.resize(universe.size());
    for (std::size_t u = 0; u < universe.size(); ++u) {
      const Unit& unit = universe.units()[u];
      const auto pos = y_universe.index_of(unit.id);
      if (!pos) {
        throw Error(ErrorKind::UniverseMismatch,
                    "unit '" + unit.id + "' is missing from one universe");
      }
      if (y_universe.units()[*pos].weight != unit.weight) {
        throw Error(ErrorKind::UniverseMismatch,
                    "unit '" + unit.id + "' has differing weights");
      }
      y_position[u] = *pos;
    }
  }
  auto y_label = [&](std::size_t u) -> const std::string& {
    return direct ? y.label(u) : y.label(y_position[u]);
  };

  ContingencyTable table;
  // Both axes ordered by first appearance along x's unit order.
  std::unordered_map<std::string, std::size_t> row_index;
  std::unordered_map<std::string, std::size_t> col_index;
  for (std::size_t u = 0; u < universe.size(); ++u) {
    if (row_index.emplace(x.label(u), table.row_labels_.size()).second) {
      table.row_labels_.push_back(x.label(u));
    }
    if (col_index.emplace(y_label(u), table.col_labels_.size()).second) {
      table.col_labels_.push_back(y_label(u));
    }
  }

  const std::size_t rows = table.row_labels_.size();
  const std::size_t cols = table.col_labels_.size();

  // One weight bucket per cell; each bucket is tree-summed so cell masses
  // stay accurate regardless of how many units fall in a cell.
  std::vector<std::vector<double>> buckets(rows * cols);
  for (std::size_t u = 0; u < universe.size(); ++u) {
    const std::size_t i = row_index.at(x.label(u));
    const std::size_t j = col_index.at(y_label(u));
    buckets[i * cols + j].push_back(universe.units()[u].weight);
  }

  table.masses_.assign(rows * cols, 0.0);
  const double total = universe.total_weight();
  for (std::size_t cell = 0; cell < buckets.size(); ++cell) {
    table.masses_[cell] = pairwise_sum(buckets[cell]) / total;
  }
  table.compute_marginals();
  return table;
}

ContingencyTable ContingencyTable::from_masses(
    std::vector<std::string> row_labels, std::vector<std::string> col_labels,
    std::vector<double> masses) {
  if (row_labels.empty() || col_labels.empty() ||
      masses.size() != row_labels.size() * col_labels.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "mass matrix shape does not match labels");
  }
  for (const auto* labels : {&row_labels, &col_labels}) {
    std::unordered_set<std::string> seen;
    for (const std::string& label : *labels) {
      if (!seen.insert(label).second) {
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate label '" + label + "'");
      }
    }
  }
  for (double mass : masses) {
    if (!(mass >= 0.0) || !std::isfinite(mass)) {
      throw Error(ErrorKind::InvalidArgument, "cell mass must be >= 0");
    }
  }
  const double total = pairwise_sum(masses);
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument,
                "cell masses sum to " + std::to_string(total) +
                    ", expected 1");
  }

  ContingencyTable table;
  table.row_labels_ = std::move(row_labels);
  table.col_labels_ = std::move(col_labels);
  table.masses_ = std::move(masses);
  table.compute_marginals();
  return table;
}

void ContingencyTable::compute_marginals() {
  const std::size_t rows = row_count();
  const std::size_t cols = col_count();
  row_marginals_.assign(rows, 0.0);
  col_marginals_.assign(cols, 0.0);
  std::vector<double> buffer;
  for (std::size_t i = 0; i < rows; ++i) {
    row_marginals_[i] = pairwise_sum(
        std::span<const double>(masses_.data() + i * cols, cols));
  }
  for (std::size_t j = 0; j < cols; ++j) {
    buffer.clear();
    for (std::size_t i = 0; i < rows; ++i) buffer.push_back(mass(i, j));
    col_marginals_[j] = pairwise_sum(buffer);
  }
}

MarginalDistribution ContingencyTable::row_marginal() const {
  return MarginalDistribution(row_labels_, row_marginals_);
}

MarginalDistribution ContingencyTable::col_marginal() const {
  return MarginalDistribution(col_labels_, col_marginals_);
}

ContingencyTable ContingencyTable::transposed() const {
  ContingencyTable table;
  table.row_labels_ = col_labels_;
  table.col_labels_ = row_labels_;
  table.masses_.assign(masses_.size(), 0.0);
  for (std::size_t i = 0; i < row_count(); ++i) {
    for (std::size_t j = 0; j < col_count(); ++j) {
      table.masses_[j * row_count() + i] = mass(i, j);
    }
  }
  table.row_marginals_ = col_marginals_;
  table.col_marginals_ = row_marginals_;
  return table;
}

}  // namespace entplan
