#pragma once

#include <cstddef>
#include <vector>

namespace entplan {

struct SymmetricEigenResult {
  std::size_t n = 0;
  std::vector<double> eigenvalues;   // by original column index
  std::vector<double> eigenvectors;  // row-major n x n; column k pairs with eigenvalues[k]
  int sweeps = 0;
  double offdiagonal_norm = 0.0;
};

// Cyclic Jacobi rotations over a symmetric matrix (row-major n x n, only
// the given storage is read). Fixed sweep order (p < q, row by row);
// stops when the off-diagonal Frobenius norm drops below 1e-12 or after
// 100 sweeps, whichever comes first. Deterministic by construction.
SymmetricEigenResult jacobi_eigendecomposition(std::vector<double> matrix,
                                               std::size_t n);

}  // namespace entplan
