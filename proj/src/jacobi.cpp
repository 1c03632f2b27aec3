#include "entplan/jacobi.hpp"

#include <cmath>

#include "entplan/errors.hpp"

namespace entplan {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffdiagonalTolerance = 1e-12;

double offdiagonal_frobenius(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = a[i * n + j];
      sum += 2.0 * v * v;
    }
  }
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigenResult jacobi_eigendecomposition(std::vector<double> a,
                                               std::size_t n) {
  if (a.size() != n * n) {
    throw Error(ErrorKind::InvalidArgument, "matrix storage must be n*n");
  }

  SymmetricEigenResult result;
  result.n = n;
  result.eigenvectors.assign(n * n, 0.0);
  std::vector<double>& v = result.eigenvectors;
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  int sweep = 0;
  double off = offdiagonal_frobenius(a, n);
  while (off >= kOffdiagonalTolerance && sweep < kMaxSweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;

        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A <- J^T A J on rows/columns p and q.
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        // V <- V J.
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    ++sweep;
    off = offdiagonal_frobenius(a, n);
  }

  result.sweeps = sweep;
  result.offdiagonal_norm = off;
  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a[i * n + i];
  return result;
}

}  // namespace entplan
