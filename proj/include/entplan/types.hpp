#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "entplan/errors.hpp"

namespace entplan {

struct Unit {
  std::string id;
  double weight = 0.0;  // persons; nonnegative
};

// The ground set of geographic units with population weights. Immutable
// after construction and shared by reference between partitions, so one
// loaded universe backs every score computed from it.
class UnitUniverse {
 public:
  // Validates: unique ids, weights >= 0 and finite, total weight > 0.
  static std::shared_ptr<const UnitUniverse> create(std::vector<Unit> units);

  const std::vector<Unit>& units() const { return units_; }
  std::size_t size() const { return units_.size(); }
  double total_weight() const { return total_weight_; }
  std::optional<std::size_t> index_of(std::string_view id) const;

 private:
  UnitUniverse() = default;

  std::vector<Unit> units_;
  std::unordered_map<std::string, std::size_t> index_;
  double total_weight_ = 0.0;
};

using UniversePtr = std::shared_ptr<const UnitUniverse>;

// True when the two universes are interchangeable for scoring: the same
// object, or the same (id, weight) sequence.
bool same_universe(const UnitUniverse& a, const UnitUniverse& b);

// A total assignment of units to opaque string labels (districts,
// counties, race categories, tracts).
class LabeledPartition {
 public:
  // One label per unit, in universe order.
  LabeledPartition(UniversePtr universe, std::vector<std::string> labels);

  // From a unit_id -> label map covering the universe exactly.
  // Errors: UnknownUnit for keys outside the universe, MissingLabel for
  // universe units with no entry.
  static LabeledPartition from_map(
      UniversePtr universe,
      const std::unordered_map<std::string, std::string>& assignment);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t unit_index) const {
    return labels_[unit_index];
  }

  // Distinct labels in first-appearance order over the unit order.
  std::vector<std::string> label_set() const;

 private:
  UniversePtr universe_;
  std::vector<std::string> labels_;
};

// Coarsens a partition by mapping each of its labels through `relabel`.
// Errors: MissingLabel if a label has no image.
LabeledPartition relabel_partition(
    const LabeledPartition& partition,
    const std::unordered_map<std::string, std::string>& relabel);

// A probability mass function over labels: all masses >= 0, summing to 1
// within 1e-12.
class MarginalDistribution {
 public:
  MarginalDistribution(std::vector<std::string> labels,
                       std::vector<double> masses);

  // Weight fraction per label of `partition`, labels in first-appearance
  // order. Zero-weight labels are kept with mass 0.
  static MarginalDistribution of(const LabeledPartition& partition);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& masses() const { return masses_; }
  std::size_t size() const { return masses_.size(); }

 private:
  std::vector<std::string> labels_;
  std::vector<double> masses_;
};

}  // namespace entplan
