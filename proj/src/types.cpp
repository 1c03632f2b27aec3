#include "entplan/types.hpp"

#include <cmath>
#include <utility>

#include "entplan/numeric.hpp"

namespace entplan {

std::shared_ptr<const UnitUniverse> UnitUniverse::create(
    std::vector<Unit> units) {
  auto universe = std::shared_ptr<UnitUniverse>(new UnitUniverse());
  universe->units_ = std::move(units);
  universe->index_.reserve(universe->units_.size());
  std::vector<double> weights;
  weights.reserve(universe->units_.size());
  for (std::size_t i = 0; i < universe->units_.size(); ++i) {
    const Unit& unit = universe->units_[i];
    if (!std::isfinite(unit.weight)) {
      throw Error(ErrorKind::InvalidArgument,
                  "non-finite weight for unit '" + unit.id + "'");
    }
    if (unit.weight < 0.0) {
      throw Error(ErrorKind::NegativeWeight,
                  "unit '" + unit.id + "' has negative weight");
    }
    if (!universe->index_.emplace(unit.id, i).second) {
      throw Error(ErrorKind::DuplicateUnit,
                  "unit '" + unit.id + "' appears more than once");
    }
    weights.push_back(unit.weight);
  }
  universe->total_weight_ = pairwise_sum(weights);
  if (!(universe->total_weight_ > 0.0)) {
    throw Error(ErrorKind::ZeroTotalWeight, "total weight is zero");
  }
  return universe;
}

std::optional<std::size_t> UnitUniverse::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_universe(const UnitUniverse& a, const UnitUniverse& b) {
  if (&a == &b) return true;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.units()[i].id != b.units()[i].id) return false;
    if (a.units()[i].weight != b.units()[i].weight) return false;
  }
  return true;
}

LabeledPartition::LabeledPartition(UniversePtr universe,
                                   std::vector<std::string> labels)
    : universe_(std::move(universe)), labels_(std::move(labels)) {
  if (!universe_) {
    throw Error(ErrorKind::InvalidArgument, "partition requires a universe");
  }
  if (labels_.size() != universe_->size()) {
    throw Error(ErrorKind::InvalidArgument,
                "expected one label per unit: got " +
                    std::to_string(labels_.size()) + " labels for " +
                    std::to_string(universe_->size()) + " units");
  }
}

LabeledPartition LabeledPartition::from_map(
    UniversePtr universe,
    const std::unordered_map<std::string, std::string>& assignment) {
  if (!universe) {
    throw Error(ErrorKind::InvalidArgument, "partition requires a universe");
  }
  for (const auto& [id, label] : assignment) {
    if (!universe->index_of(id)) {
      throw Error(ErrorKind::UnknownUnit,
                  "unit '" + id + "' is not in the universe");
    }
  }
  std::vector<std::string> labels;
  labels.reserve(universe->size());
  for (const Unit& unit : universe->units()) {
    auto it = assignment.find(unit.id);
    if (it == assignment.end()) {
      throw Error(ErrorKind::MissingLabel,
                  "unit '" + unit.id + "' has no label");
    }
    labels.push_back(it->second);
  }
  return LabeledPartition(std::move(universe), std::move(labels));
}

std::vector<std::string> LabeledPartition::label_set() const {
  std::vector<std::string> ordered;
  std::unordered_map<std::string, std::size_t> seen;
  for (const std::string& label : labels_) {
    if (seen.emplace(label, ordered.size()).second) {
      ordered.push_back(label);
    }
  }
  return ordered;
}

LabeledPartition relabel_partition(
    const LabeledPartition& partition,
    const std::unordered_map<std::string, std::string>& relabel) {
  std::vector<std::string> labels;
  labels.reserve(partition.labels().size());
  for (const std::string& label : partition.labels()) {
    auto it = relabel.find(label);
    if (it == relabel.end()) {
      throw Error(ErrorKind::MissingLabel,
                  "label '" + label + "' has no replacement");
    }
    labels.push_back(it->second);
  }
  return LabeledPartition(partition.universe(), std::move(labels));
}

MarginalDistribution::MarginalDistribution(std::vector<std::string> labels,
                                           std::vector<double> masses)
    : labels_(std::move(labels)), masses_(std::move(masses)) {
  if (labels_.size() != masses_.size() || masses_.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "marginal needs matching, nonempty labels and masses");
  }
  for (double mass : masses_) {
    if (!(mass >= 0.0) || !std::isfinite(mass)) {
      throw Error(ErrorKind::InvalidArgument, "marginal mass must be >= 0");
    }
  }
  const double total = pairwise_sum(masses_);
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidArgument,
                "marginal masses sum to " + std::to_string(total) +
                    ", expected 1");
  }
}

MarginalDistribution MarginalDistribution::of(
    const LabeledPartition& partition) {
  const UnitUniverse& universe = *partition.universe();
  std::vector<std::string> labels = partition.label_set();
  std::unordered_map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) label_index[labels[i]] = i;

  // Per-label weight sums accumulated with the same tree summation used
  // everywhere else, then normalized by the universe total.
  std::vector<std::vector<double>> per_label(labels.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    per_label[label_index[partition.label(i)]].push_back(
        universe.units()[i].weight);
  }
  std::vector<double> masses(labels.size(), 0.0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    masses[i] = pairwise_sum(per_label[i]) / universe.total_weight();
  }
  return MarginalDistribution(std::move(labels), std::move(masses));
}

}  // namespace entplan
