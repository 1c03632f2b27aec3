#pragma once

#include "entplan/contingency.hpp"
#include "entplan/types.hpp"

namespace entplan {

// Ent(X) = sum_i p_i * log2(1/p_i), in bits. Zero-mass labels contribute
// nothing; result lies in [0, log2(#positive-mass labels)].
double entropy_bits(const MarginalDistribution& m);

// Entropy of one column's conditional distribution p_ij = mass(i,j)/q_j.
// Errors: EmptyPart if column j has zero marginal.
double local_entropy_bits(const ContingencyTable& table, std::size_t column);

// Ent(rows|cols) = sum_j q_j * Ent(rows|col j). Columns with zero
// marginal contribute 0.
double conditional_entropy_bits(const ContingencyTable& table);

// Ent(X|Y) + Ent(Y) - Ent(Y|X) - Ent(X): identically zero in exact
// arithmetic, so the returned value is a numerical self-check.
double bayes_residual_bits(const ContingencyTable& table);

}  // namespace entplan
