#pragma once

#include <cstddef>
#include <span>

namespace entplan {

// Deterministic pairwise (tree) summation. Splits the range in half until
// blocks are small, then sums linearly. Keeps rounding error growth at
// O(log n) so entropy identities hold to ~1e-12 even on state-sized tables.
double pairwise_sum(std::span<const double> values);

// p * log2(1/p) with the continuity convention 0 * log2(1/0) = 0.
double entropy_term(double p);

}  // namespace entplan
