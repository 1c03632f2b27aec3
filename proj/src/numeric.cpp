#include "entplan/numeric.hpp"

#include <cmath>

namespace entplan {

namespace {
constexpr std::size_t kLinearBlock = 16;
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n <= kLinearBlock) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double entropy_term(double p) {
  // Masses a rounding error above 1 (e.g. a one-part marginal whose cell
  // sums to 1 + 1e-16) would otherwise contribute a negative sliver and
  // push a whole entropy below zero.
  if (p <= 0.0 || p >= 1.0) return 0.0;
  // -log2(p) rather than log2(1/p): avoids overflow for tiny p and is
  // exact for dyadic masses, which the closed-form grid cases rely on.
  return p * -std::log2(p);
}

}  // namespace entplan
