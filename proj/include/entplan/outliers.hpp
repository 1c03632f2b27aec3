#pragma once

#include <span>
#include <string>
#include <vector>

#include "entplan/distance_matrix.hpp"

namespace entplan {

struct PlanRank {
  std::size_t index = 0;
  std::string plan_id;
  double mean_distance = 0.0;  // mean distance to every other plan
  int rank = 0;                // 1 = most outlying; ties share a rank
};

struct OutlierSummary {
  std::vector<PlanRank> plans;    // in plan order
  std::vector<PlanRank> flagged;  // the requested plans, in request order
};

// Mean-distance outlyingness. Rank is competition style: 1 plus the
// number of plans with strictly larger mean distance, so equal means tie
// and the report stays in stable plan order.
// Errors: IndexOutOfRange for bad flagged indices.
OutlierSummary outlier_summary(const DistanceMatrix& dm,
                               std::span<const std::size_t> flagged = {});

}  // namespace entplan
