#pragma once

#include <array>
#include <vector>

#include "entplan/distance_matrix.hpp"

namespace entplan {

struct Embedding2D {
  std::vector<std::array<double, 2>> coordinates;  // centroid at the origin
  double eigenvalue_1 = 0.0;  // retained eigenvalues, descending
  double eigenvalue_2 = 0.0;
  int negative_eigenvalue_count = 0;  // clamped, never silently dropped
  bool degenerate = false;            // all input distances were zero
};

// Classical (Torgerson) MDS: double-center the squared distances
// (B = -1/2 J D^2 J), take the top two eigenpairs, and scale eigenvectors
// by sqrt(max(eigenvalue, 0)). Output is deterministic: each axis is
// oriented so its largest-magnitude coordinate is positive, and eigenvalue
// ties keep their original column order. An all-zero matrix yields
// all-origin coordinates with the degenerate flag set instead of failing.
Embedding2D classical_mds(const DistanceMatrix& dm);

}  // namespace entplan
