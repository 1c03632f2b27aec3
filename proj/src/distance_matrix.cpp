#include "entplan/distance_matrix.hpp"

#include <cmath>
#include <thread>
#include <utility>

#include "entplan/scores.hpp"

namespace entplan {

DistanceMatrix DistanceMatrix::from_entries(std::vector<std::string> plan_ids,
                                            std::vector<double> entries) {
  const std::size_t n = plan_ids.size();
  if (entries.size() != n * n) {
    throw Error(ErrorKind::InvalidArgument,
                "entry matrix shape does not match plan count");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (entries[a * n + a] != 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "diagonal must be exactly zero (plan '" + plan_ids[a] + "')");
    }
    for (std::size_t b = 0; b < n; ++b) {
      const double d = entries[a * n + b];
      if (!(d >= 0.0) || !std::isfinite(d)) {
        throw Error(ErrorKind::InvalidArgument, "distances must be >= 0");
      }
      if (std::abs(d - entries[b * n + a]) > 1e-12) {
        throw Error(ErrorKind::InvalidArgument, "matrix is not symmetric");
      }
    }
  }
  DistanceMatrix dm;
  dm.plan_ids_ = std::move(plan_ids);
  dm.entries_ = std::move(entries);
  return dm;
}

DistanceMatrix pairwise_distances(std::span<const LabeledPartition> plans,
                                  std::vector<std::string> plan_ids,
                                  unsigned threads) {
  const std::size_t n = plans.size();
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "need at least two plans, got " + std::to_string(n));
  }
  if (plan_ids.empty()) {
    plan_ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      plan_ids.push_back("plan" + std::to_string(i));
    }
  }
  if (plan_ids.size() != n) {
    throw Error(ErrorKind::InvalidArgument,
                "plan id count does not match plan count");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!same_universe(*plans[0].universe(), *plans[i].universe())) {
      throw Error(ErrorKind::UniverseMismatch,
                  "plan '" + plan_ids[i] + "' uses a different universe");
    }
  }

  // Unordered pairs in row order; pair k -> (a, b).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }

  std::vector<double> entries(n * n, 0.0);
  auto compute_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto [a, b] = pairs[k];
      const double d = plan_distance_bits(plans[a], plans[b]);
      entries[a * n + b] = d;
      entries[b * n + a] = d;
    }
  };

  if (threads == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = hw == 0 ? 1 : hw;
  }
  // Each pair writes only its own two cells, so plain static partitioning
  // is race-free and the result is schedule-independent.
  const std::size_t per_thread = 64;
  if (threads <= 1 || pairs.size() < 2 * per_thread) {
    compute_range(0, pairs.size());
  } else {
    const std::size_t worker_count =
        std::min<std::size_t>(threads, (pairs.size() + per_thread - 1) / per_thread);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::size_t chunk = (pairs.size() + worker_count - 1) / worker_count;
    for (std::size_t w = 0; w < worker_count; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(pairs.size(), begin + chunk);
      workers.emplace_back(compute_range, begin, end);
    }
    for (auto& worker : workers) worker.join();
  }

  return DistanceMatrix::from_entries(std::move(plan_ids), std::move(entries));
}

}  // namespace entplan
