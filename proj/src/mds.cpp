#include "entplan/mds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entplan/jacobi.hpp"
#include "entplan/numeric.hpp"

namespace entplan {

Embedding2D classical_mds(const DistanceMatrix& dm) {
  const std::size_t n = dm.size();
  if (n == 0) {
    throw Error(ErrorKind::InvalidArgument, "empty distance matrix");
  }

  Embedding2D embedding;
  embedding.coordinates.assign(n, {0.0, 0.0});

  bool all_zero = true;
  for (double d : dm.entries()) {
    if (d != 0.0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) {
    embedding.degenerate = true;
    return embedding;
  }

  // Double-centered Gram-like matrix B = -1/2 J D^2 J, via
  // b_ij = -1/2 (d2_ij - rowmean_i - rowmean_j + grandmean).
  std::vector<double> squared(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    squared[k] = dm.entries()[k] * dm.entries()[k];
  }
  std::vector<double> row_mean(n);
  for (std::size_t i = 0; i < n; ++i) {
    row_mean[i] =
        pairwise_sum(std::span<const double>(squared.data() + i * n, n)) /
        static_cast<double>(n);
  }
  const double grand_mean =
      pairwise_sum(row_mean) / static_cast<double>(n);
  std::vector<double> b(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[i * n + j] =
          -0.5 * (squared[i * n + j] - row_mean[i] - row_mean[j] + grand_mean);
    }
  }

  const SymmetricEigenResult eigen = jacobi_eigendecomposition(std::move(b), n);

  // Descending by eigenvalue; stable, so ties keep column order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return eigen.eigenvalues[lhs] > eigen.eigenvalues[rhs];
                   });

  double max_abs_eigenvalue = 0.0;
  for (double value : eigen.eigenvalues) {
    max_abs_eigenvalue = std::max(max_abs_eigenvalue, std::abs(value));
  }
  // Eigenvalues this close to zero are centering noise, not geometry.
  const double noise_floor = 1e-12 * std::max(1.0, max_abs_eigenvalue);
  for (double value : eigen.eigenvalues) {
    if (value < -noise_floor) ++embedding.negative_eigenvalue_count;
  }

  embedding.eigenvalue_1 = eigen.eigenvalues[order[0]];
  embedding.eigenvalue_2 = n > 1 ? eigen.eigenvalues[order[1]] : 0.0;

  for (std::size_t axis = 0; axis < 2 && axis < n; ++axis) {
    const std::size_t column = order[axis];
    const double lambda = eigen.eigenvalues[column];
    if (lambda <= noise_floor) continue;  // axis stays at zero
    const double scale = std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i) {
      embedding.coordinates[i][axis] =
          eigen.eigenvectors[i * n + column] * scale;
    }
  }

  // Remove the residual floating-point drift of the centroid, then fix
  // the reflection: the largest-magnitude coordinate of each axis points
  // in the positive direction.
  for (std::size_t axis = 0; axis < 2; ++axis) {
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = embedding.coordinates[i][axis];
    const double mean = pairwise_sum(values) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) embedding.coordinates[i][axis] -= mean;

    std::size_t largest = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(embedding.coordinates[i][axis]) >
          std::abs(embedding.coordinates[largest][axis])) {
        largest = i;
      }
    }
    if (embedding.coordinates[largest][axis] < 0.0) {
      for (std::size_t i = 0; i < n; ++i) {
        embedding.coordinates[i][axis] = -embedding.coordinates[i][axis];
      }
    }
  }

  return embedding;
}

}  // namespace entplan
