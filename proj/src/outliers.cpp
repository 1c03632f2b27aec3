#include "entplan/outliers.hpp"

#include "entplan/numeric.hpp"

namespace entplan {

OutlierSummary outlier_summary(const DistanceMatrix& dm,
                               std::span<const std::size_t> flagged) {
  const std::size_t n = dm.size();
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "outlier summary needs at least two plans");
  }
  for (std::size_t index : flagged) {
    if (index >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "flagged plan index " + std::to_string(index) +
                      " out of range for " + std::to_string(n) + " plans");
    }
  }

  std::vector<double> means(n, 0.0);
  std::vector<double> buffer;
  buffer.reserve(n - 1);
  for (std::size_t a = 0; a < n; ++a) {
    buffer.clear();
    for (std::size_t b = 0; b < n; ++b) {
      if (b != a) buffer.push_back(dm.at(a, b));
    }
    means[a] = pairwise_sum(buffer) / static_cast<double>(n - 1);
  }

  OutlierSummary summary;
  summary.plans.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    int rank = 1;
    for (std::size_t b = 0; b < n; ++b) {
      if (means[b] > means[a]) ++rank;
    }
    summary.plans.push_back(
        PlanRank{a, dm.plan_ids()[a], means[a], rank});
  }
  summary.flagged.reserve(flagged.size());
  for (std::size_t index : flagged) {
    summary.flagged.push_back(summary.plans[index]);
  }
  return summary;
}

}  // namespace entplan
