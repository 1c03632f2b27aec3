#pragma once

#include <optional>

#include "entplan/adjacency.hpp"
#include "entplan/types.hpp"

namespace entplan {

struct SegregationResult {
  double seg = 0.0;              // Ent(R|T)/Ent(R), in [0,1]
  double ent_conditional = 0.0;  // Ent(R|T), bits
  double ent_marginal = 0.0;     // Ent(R), bits
};

// How well location predicts category membership, normalized by the
// statewide category entropy. 0 = knowing the region determines the
// category (complete segregation), 1 = regions carry no signal; higher
// means less segregated.
// Errors: DegenerateMarginal when the category partition has fewer than
// two positive-mass categories (the ratio is undefined, not 0 or 1).
SegregationResult segregation_score(const LabeledPartition& category,
                                    const LabeledPartition& region);

// Ent(districts|counties): expected extra bits needed to name a voter's
// district once their county is known.
double county_split_entropy_bits(const LabeledPartition& districts,
                                 const LabeledPartition& counties);

// Number of counties whose units carry two or more district labels.
// Zero-weight units are ignored unless count_zero_weight is set, which
// makes the count purely geometric.
int splits_count(const LabeledPartition& districts,
                 const LabeledPartition& counties,
                 bool count_zero_weight = false);

// Total connected components over all nonempty (county, district) overlay
// cells, computed on the unit adjacency graph. Zero-weight units count;
// this score is geometric, not population-weighted.
int pieces_count(const LabeledPartition& districts,
                 const LabeledPartition& counties,
                 const AdjacencyGraph& graph);

struct CountySplitReport {
  double entropy_bits = 0.0;
  int splits = 0;
  std::optional<int> pieces;  // absent when no adjacency was supplied
};

CountySplitReport county_split_report(const LabeledPartition& districts,
                                      const LabeledPartition& counties,
                                      const AdjacencyGraph* graph = nullptr,
                                      bool count_zero_weight = false);

// Symmetrized conditional entropy between two plans:
// (Ent(a|b) + Ent(b|a)) / 2. Zero iff the plans induce the same partition
// of the positive-weight units; bounded above by log2(max district count).
// Plans need not have equal district counts.
double plan_distance_bits(const LabeledPartition& a, const LabeledPartition& b);

}  // namespace entplan
