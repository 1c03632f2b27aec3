#pragma once

#include <span>
#include <string>
#include <vector>

#include "entplan/types.hpp"

namespace entplan {

// Symmetric pairwise plan distances with zero diagonal.
class DistanceMatrix {
 public:
  // Validates symmetry (within 1e-12), exact zero diagonal, and
  // nonnegative entries. `entries` is row-major n x n.
  static DistanceMatrix from_entries(std::vector<std::string> plan_ids,
                                     std::vector<double> entries);

  std::size_t size() const { return plan_ids_.size(); }
  double at(std::size_t a, std::size_t b) const {
    return entries_[a * size() + b];
  }
  const std::vector<std::string>& plan_ids() const { return plan_ids_; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  DistanceMatrix() = default;

  std::vector<std::string> plan_ids_;
  std::vector<double> entries_;
};

// Symmetrized conditional-entropy distance for every unordered pair.
// Pairs are computed once and may be computed on several threads; the
// result does not depend on the schedule. `threads` 0 picks a sensible
// default. Errors: UniverseMismatch; InvalidArgument for n < 2.
DistanceMatrix pairwise_distances(std::span<const LabeledPartition> plans,
                                  std::vector<std::string> plan_ids = {},
                                  unsigned threads = 0);

}  // namespace entplan
