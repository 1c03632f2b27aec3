#pragma once

#include <string>
#include <vector>

#include "entplan/types.hpp"

namespace entplan {

// Normalized joint mass p_ij between two partitions of one universe.
// Grand total is 1; rows and columns are ordered by first appearance in
// the universe's unit order, so construction is deterministic. This is
// the single object every entropy score is computed from.
class ContingencyTable {
 public:
  // Joint table of X (rows) against Y (columns).
  // Errors: UniverseMismatch if the partitions' universes differ.
  static ContingencyTable build(const LabeledPartition& x,
                                const LabeledPartition& y);

  // Direct construction from a row-major mass matrix; validates entries
  // >= 0 and grand total 1 within 1e-12.
  static ContingencyTable from_masses(std::vector<std::string> row_labels,
                                      std::vector<std::string> col_labels,
                                      std::vector<double> masses);

  std::size_t row_count() const { return row_labels_.size(); }
  std::size_t col_count() const { return col_labels_.size(); }
  double mass(std::size_t row, std::size_t col) const {
    return masses_[row * col_count() + col];
  }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::vector<double>& row_marginals() const { return row_marginals_; }
  const std::vector<double>& col_marginals() const { return col_marginals_; }

  MarginalDistribution row_marginal() const;
  MarginalDistribution col_marginal() const;

  ContingencyTable transposed() const;

 private:
  ContingencyTable() = default;
  void compute_marginals();

  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<double> masses_;  // row-major, row_count x col_count
  std::vector<double> row_marginals_;
  std::vector<double> col_marginals_;
};

}  // namespace entplan
