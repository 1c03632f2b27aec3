#include "entplan/scores.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "entplan/contingency.hpp"
#include "entplan/entropy.hpp"

namespace entplan {

SegregationResult segregation_score(const LabeledPartition& category,
                                    const LabeledPartition& region) {
  const ContingencyTable table = ContingencyTable::build(category, region);

  std::size_t positive_categories = 0;
  for (double mass : table.row_marginals()) {
    if (mass > 0.0) ++positive_categories;
  }
  if (positive_categories < 2) {
    throw Error(ErrorKind::DegenerateMarginal,
                "category partition needs at least two positive-mass "
                "categories; Ent(R) would be 0");
  }

  SegregationResult result;
  result.ent_marginal = entropy_bits(table.row_marginal());
  result.ent_conditional = conditional_entropy_bits(table);
  result.seg = result.ent_conditional / result.ent_marginal;
  return result;
}

double county_split_entropy_bits(const LabeledPartition& districts,
                                 const LabeledPartition& counties) {
  return conditional_entropy_bits(ContingencyTable::build(districts, counties));
}

int splits_count(const LabeledPartition& districts,
                 const LabeledPartition& counties, bool count_zero_weight) {
  const UnitUniverse& universe = *counties.universe();
  if (!same_universe(universe, *districts.universe())) {
    throw Error(ErrorKind::UniverseMismatch,
                "partitions are over different universes");
  }
  // county label -> set of district labels seen on its (counted) units
  std::unordered_map<std::string, std::unordered_set<std::string>> seen;
  for (std::size_t u = 0; u < universe.size(); ++u) {
    if (!count_zero_weight && universe.units()[u].weight <= 0.0) continue;
    seen[counties.label(u)].insert(districts.label(u));
  }
  int splits = 0;
  for (const auto& [county, district_labels] : seen) {
    if (district_labels.size() >= 2) ++splits;
  }
  return splits;
}

namespace {

// Union-find over unit indices; path halving plus union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when the merge joined two distinct components.
  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

int pieces_count(const LabeledPartition& districts,
                 const LabeledPartition& counties,
                 const AdjacencyGraph& graph) {
  const UnitUniverse& universe = *counties.universe();
  if (!same_universe(universe, *districts.universe()) ||
      !same_universe(universe, *graph.universe())) {
    throw Error(ErrorKind::UniverseMismatch,
                "partitions and graph are over different universes");
  }
  // Only edges interior to an overlay cell may merge; every unit starts
  // as its own piece, so pieces = units - successful merges.
  DisjointSets sets(universe.size());
  std::size_t merges = 0;
  for (const auto& [a, b] : graph.edges()) {
    if (districts.label(a) != districts.label(b)) continue;
    if (counties.label(a) != counties.label(b)) continue;
    if (sets.merge(a, b)) ++merges;
  }
  return static_cast<int>(universe.size() - merges);
}

CountySplitReport county_split_report(const LabeledPartition& districts,
                                      const LabeledPartition& counties,
                                      const AdjacencyGraph* graph,
                                      bool count_zero_weight) {
  CountySplitReport report;
  report.entropy_bits = county_split_entropy_bits(districts, counties);
  report.splits = splits_count(districts, counties, count_zero_weight);
  if (graph != nullptr) {
    report.pieces = pieces_count(districts, counties, *graph);
  }
  return report;
}

double plan_distance_bits(const LabeledPartition& a,
                          const LabeledPartition& b) {
  const ContingencyTable table = ContingencyTable::build(a, b);
  const double a_given_b = conditional_entropy_bits(table);
  const double b_given_a = conditional_entropy_bits(table.transposed());
  return (a_given_b + b_given_a) / 2.0;
}

}  // namespace entplan
