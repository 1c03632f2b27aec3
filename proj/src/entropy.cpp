#include "entplan/entropy.hpp"

#include <vector>

#include "entplan/numeric.hpp"

namespace entplan {

double entropy_bits(const MarginalDistribution& m) {
  std::vector<double> terms;
  terms.reserve(m.size());
  for (double p : m.masses()) terms.push_back(entropy_term(p));
  return pairwise_sum(terms);
}

double local_entropy_bits(const ContingencyTable& table, std::size_t column) {
  if (column >= table.col_count()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "column " + std::to_string(column) + " of " +
                    std::to_string(table.col_count()));
  }
  const double q = table.col_marginals()[column];
  if (q <= 0.0) {
    throw Error(ErrorKind::EmptyPart,
                "column '" + table.col_labels()[column] +
                    "' carries no population");
  }
  std::vector<double> terms;
  terms.reserve(table.row_count());
  for (std::size_t i = 0; i < table.row_count(); ++i) {
    terms.push_back(entropy_term(table.mass(i, column) / q));
  }
  return pairwise_sum(terms);
}

double conditional_entropy_bits(const ContingencyTable& table) {
  std::vector<double> weighted;
  weighted.reserve(table.col_count());
  for (std::size_t j = 0; j < table.col_count(); ++j) {
    const double q = table.col_marginals()[j];
    if (q <= 0.0) continue;
    weighted.push_back(q * local_entropy_bits(table, j));
  }
  return pairwise_sum(weighted);
}

double bayes_residual_bits(const ContingencyTable& table) {
  const double ent_x_given_y = conditional_entropy_bits(table);
  const double ent_y_given_x = conditional_entropy_bits(table.transposed());
  const double ent_x = entropy_bits(table.row_marginal());
  const double ent_y = entropy_bits(table.col_marginal());
  return ent_x_given_y + ent_y - ent_y_given_x - ent_x;
}

}  // namespace entplan
