#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "entplan/contingency.hpp"
#include "entplan/entropy.hpp"
#include "entplan/errors.hpp"
#include "entplan/numeric.hpp"
#include "entplan/types.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace entplan;
using namespace entplan::testing;

namespace {

// Two-outcome entropies frozen from a 50-digit arbitrary-precision run.
constexpr double kTwoPoint01 = 0.080793135895911172825;
constexpr double kTwoPoint0625 = 0.33729006661701387876;
constexpr double kTwoPoint125 = 0.54356444319959640599;
constexpr double kTwoPoint25 = 0.81127812445913286391;

MarginalDistribution two_outcome(double p) {
  return MarginalDistribution({"in", "out"}, {p, 1.0 - p});
}

}  // namespace

TEST_CASE("pairwise summation matches long double accumulation") {
  std::mt19937 rng(20260823);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values(1000);
    for (double& v : values) v = value(rng);
    long double reference = 0.0L;
    for (double v : values) reference += v;
    CHECK(std::abs(pairwise_sum(values) - static_cast<double>(reference)) < 1e-12);
  }
  CHECK(pairwise_sum({}) == 0.0);
  CHECK(pairwise_sum(std::vector<double>{3.5}) == 3.5);
}

TEST_CASE("entropy term treats zero mass as zero") {
  CHECK(entropy_term(0.0) == 0.0);
  CHECK(entropy_term(-0.0) == 0.0);
  CHECK(entropy_term(1.0) == 0.0);
  CHECK(entropy_term(0.5) == 0.5);
  CHECK(entropy_term(0.25) == 0.5);
}

TEST_CASE("universe validates unit ids and weights") {
  CHECK_THROWS_AS(UnitUniverse::create({{"a", 1.0}, {"a", 2.0}}), Error);
  CHECK_THROWS_AS(UnitUniverse::create({{"a", -1.0}}), Error);
  CHECK_THROWS_AS(UnitUniverse::create({{"a", 0.0}, {"b", 0.0}}), Error);
  CHECK_THROWS_AS(UnitUniverse::create({}), Error);

  try {
    UnitUniverse::create({{"a", 1.0}, {"a", 2.0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateUnit);
  }

  auto universe = UnitUniverse::create({{"a", 1.0}, {"b", 3.0}});
  CHECK(universe->size() == 2);
  CHECK(universe->total_weight() == 4.0);
  CHECK(universe->index_of("b") == std::size_t{1});
  CHECK_FALSE(universe->index_of("zz").has_value());
}

TEST_CASE("partition construction and label order") {
  auto universe = UnitUniverse::create({{"a", 1.0}, {"b", 1.0}, {"c", 2.0}});
  LabeledPartition part(universe, {"x", "y", "x"});
  CHECK(part.label(0) == "x");
  CHECK(part.label_set() == std::vector<std::string>{"x", "y"});

  auto mapped = LabeledPartition::from_map(
      universe, {{"c", "top"}, {"a", "low"}, {"b", "low"}});
  CHECK(mapped.label(2) == "top");
  CHECK(mapped.label_set() == std::vector<std::string>{"low", "top"});

  CHECK_THROWS_AS(LabeledPartition::from_map(universe, {{"a", "x"}}), Error);
  CHECK_THROWS_AS(
      LabeledPartition::from_map(universe, {{"a", "x"}, {"b", "x"}, {"zz", "x"}}),
      Error);
}

TEST_CASE("marginal distribution of a partition uses weight shares") {
  auto universe =
      UnitUniverse::create({{"a", 1.0}, {"b", 1.0}, {"c", 2.0}, {"d", 4.0}});
  LabeledPartition part(universe, {"x", "y", "x", "y"});
  auto marginal = MarginalDistribution::of(part);
  CHECK(marginal.labels() == std::vector<std::string>{"x", "y"});
  CHECK(marginal.masses()[0] == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(marginal.masses()[1] == doctest::Approx(0.625).epsilon(1e-15));
}

TEST_CASE("contingency table matches brute-force joint weights") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto universe = random_universe(rng, 40);
    auto x = random_partition(rng, universe, 4);
    auto y = random_partition(rng, universe, 5);
    auto table = ContingencyTable::build(x, y);
    auto joint = bruteforce_joint_weights(x, y);
    const double total = universe->total_weight();
    for (std::size_t r = 0; r < table.row_labels().size(); ++r) {
      for (std::size_t c = 0; c < table.col_labels().size(); ++c) {
        const long double expected =
            joint.at({table.row_labels()[r], table.col_labels()[c]}) / total;
        CHECK(std::abs(table.mass(r, c) - static_cast<double>(expected)) < 1e-12);
      }
    }
  }
}

TEST_CASE("contingency table accepts permuted universes with equal weights") {
  auto first = UnitUniverse::create({{"a", 1.0}, {"b", 2.0}, {"c", 3.0}});
  auto second = UnitUniverse::create({{"c", 3.0}, {"a", 1.0}, {"b", 2.0}});
  LabeledPartition x(first, {"p", "p", "q"});
  LabeledPartition y(second, {"k", "k", "k"});
  auto table = ContingencyTable::build(x, y);
  CHECK(table.mass(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(table.mass(1, 0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("a partition crossed with itself yields a diagonal table") {
  auto universe = UnitUniverse::create(
      {{"u0", 1.0}, {"u1", 1.0}, {"u2", 1.0}, {"u3", 1.0}});
  LabeledPartition singles(universe, {"p0", "p1", "p2", "p3"});
  auto table = ContingencyTable::build(singles, singles);
  REQUIRE(table.row_count() == 4);
  REQUIRE(table.col_count() == 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(table.mass(r, c) == (r == c ? 0.25 : 0.0));
  CHECK(conditional_entropy_bits(table) == 0.0);

  // Self-tables hold the chain-rule residual to a tighter bound than the
  // generic random-table case.
  std::mt19937 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    auto units = random_universe(rng, 40);
    auto part = random_partition(rng, units, 5);
    CHECK(std::abs(bayes_residual_bits(ContingencyTable::build(part, part))) <
          1e-12);
  }
}

TEST_CASE("crossing rows with columns of a uniform grid fills every cell") {
  auto world = unit_grid(4, 4);
  std::vector<std::string> rows(16), cols(16);
  for (std::size_t u = 0; u < 16; ++u) {
    rows[u] = "row" + std::to_string(u / 4);
    cols[u] = "col" + std::to_string(u % 4);
  }
  auto table = ContingencyTable::build(LabeledPartition(world.universe, rows),
                                       LabeledPartition(world.universe, cols));
  REQUIRE(table.row_count() == 4);
  REQUIRE(table.col_count() == 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(table.mass(r, c) == 0.0625);
}

TEST_CASE("contingency table rejects mismatched universes") {
  auto first = UnitUniverse::create({{"a", 1.0}, {"b", 2.0}});
  auto second = UnitUniverse::create({{"a", 1.0}, {"z", 2.0}});
  auto reweighted = UnitUniverse::create({{"a", 1.0}, {"b", 5.0}});
  LabeledPartition x(first, {"p", "q"});
  CHECK_THROWS_AS(
      ContingencyTable::build(x, LabeledPartition(second, {"k", "k"})), Error);
  CHECK_THROWS_AS(
      ContingencyTable::build(x, LabeledPartition(reweighted, {"k", "k"})), Error);
  try {
    ContingencyTable::build(x, LabeledPartition(second, {"k", "k"}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UniverseMismatch);
  }
}

TEST_CASE("table from raw masses validates shape and normalization") {
  CHECK_NOTHROW(ContingencyTable::from_masses({"r0"}, {"c0"}, {1.0}));
  CHECK_THROWS_AS(ContingencyTable::from_masses({"r0"}, {"c0"}, {0.5}), Error);
  CHECK_THROWS_AS(ContingencyTable::from_masses({"r0"}, {"c0", "c1"}, {1.0}), Error);
  CHECK_THROWS_AS(
      ContingencyTable::from_masses({"r0", "r0"}, {"c0"}, {0.5, 0.5}), Error);
  CHECK_THROWS_AS(
      ContingencyTable::from_masses({"r0", "r1"}, {"c0"}, {1.5, -0.5}), Error);
}

TEST_CASE("entropy of point mass and uniform distributions") {
  CHECK(entropy_bits(MarginalDistribution({"only"}, {1.0})) == 0.0);
  CHECK(entropy_bits(MarginalDistribution({"a", "b"}, {0.5, 0.5})) == 1.0);
  CHECK(entropy_bits(MarginalDistribution({"a", "b", "c", "d"},
                                          {0.25, 0.25, 0.25, 0.25})) == 2.0);
  const double eighth = 1.0 / 8.0;
  CHECK(entropy_bits(MarginalDistribution(
            numbered_labels("a", 8), std::vector<double>(8, eighth))) == 3.0);
}

TEST_CASE("entropy of two-outcome distributions matches frozen references") {
  CHECK(entropy_bits(two_outcome(0.01)) == doctest::Approx(kTwoPoint01).epsilon(1e-14));
  CHECK(entropy_bits(two_outcome(0.0625)) ==
        doctest::Approx(kTwoPoint0625).epsilon(1e-14));
  CHECK(entropy_bits(two_outcome(0.125)) ==
        doctest::Approx(kTwoPoint125).epsilon(1e-14));
  CHECK(entropy_bits(two_outcome(0.25)) ==
        doctest::Approx(kTwoPoint25).epsilon(1e-14));
}

TEST_CASE("entropy is bounded by log2 of the outcome count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    auto table = random_table(rng, 12, 12);
    auto marginal = table.row_marginal();
    const double bits = entropy_bits(marginal);
    CHECK(bits >= 0.0);
    CHECK(bits <=
          std::log2(static_cast<double>(marginal.labels().size())) + 1e-9);
  }
}

TEST_CASE("maximal entropy demands equal positive masses") {
  // The ceiling is reached exactly at the uniform distribution, including
  // when some labels carry no mass at all.
  std::vector<double> uniform(5, 0.2);
  CHECK(entropy_bits(MarginalDistribution(numbered_labels("a", 5), uniform)) ==
        doctest::Approx(std::log2(5.0)).epsilon(1e-13));
  std::vector<double> padded = {0.25, 0.25, 0.0, 0.25, 0.25, 0.0};
  CHECK(entropy_bits(MarginalDistribution(numbered_labels("b", 6), padded)) ==
        2.0);

  // Any imbalance keeps the entropy visibly below the ceiling.
  std::vector<double> lopsided = {0.21, 0.19, 0.2, 0.2, 0.2};
  CHECK(entropy_bits(MarginalDistribution(numbered_labels("c", 5), lopsided)) <
        std::log2(5.0) - 1e-9);
}

TEST_CASE("local entropy reads one column of the table") {
  // Column 0 splits 3:1, column 1 is pure.
  auto table = ContingencyTable::from_masses(
      {"r0", "r1"}, {"c0", "c1"}, {0.375, 0.5, 0.125, 0.0});
  CHECK(local_entropy_bits(table, 0) ==
        doctest::Approx(kTwoPoint25).epsilon(1e-14));
  CHECK(local_entropy_bits(table, 1) == 0.0);
  CHECK_THROWS_AS(local_entropy_bits(table, 2), Error);

  // A 50/50 column is worth exactly one bit.
  auto even = ContingencyTable::from_masses(
      {"r0", "r1"}, {"c0", "c1"}, {0.25, 0.25, 0.25, 0.25});
  CHECK(local_entropy_bits(even, 0) == 1.0);

  auto empty_column = ContingencyTable::from_masses(
      {"r0", "r1"}, {"c0", "c1"}, {0.5, 0.0, 0.5, 0.0});
  CHECK_THROWS_AS(local_entropy_bits(empty_column, 1), Error);
}

TEST_CASE("conditional entropy is the weight-average of local entropies") {
  auto table = ContingencyTable::from_masses(
      {"r0", "r1"}, {"c0", "c1"}, {0.375, 0.5, 0.125, 0.0});
  const double expected = 0.5 * local_entropy_bits(table, 0);
  CHECK(conditional_entropy_bits(table) ==
        doctest::Approx(expected).epsilon(1e-14));

  // Pure columns everywhere: knowing the column settles the row.
  auto pure = ContingencyTable::from_masses(
      {"r0", "r1"}, {"c0", "c1"}, {0.25, 0.0, 0.0, 0.75});
  CHECK(conditional_entropy_bits(pure) == 0.0);
}

TEST_CASE("conditional entropy skips columns with no mass") {
  auto table = ContingencyTable::from_masses(
      {"r0", "r1"}, {"c0", "c1"}, {0.5, 0.0, 0.5, 0.0});
  CHECK(conditional_entropy_bits(table) == 1.0);
}

TEST_CASE("conditional entropy matches the closed form on random partitions") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto universe = random_universe(rng, 60);
    auto districts = random_partition(rng, universe, 4);
    auto counties = random_partition(rng, universe, 6);
    auto table = ContingencyTable::build(districts, counties);
    const long double expected =
        closed_form_conditional_entropy(districts, counties);
    CHECK(std::abs(conditional_entropy_bits(table) -
                   static_cast<double>(expected)) < 1e-12);
  }
}

TEST_CASE("conditional entropy is positive once any column mixes rows") {
  auto mixed = ContingencyTable::from_masses(
      {"r0", "r1"}, {"c0", "c1"}, {0.40, 0.25, 0.10, 0.25});
  CHECK(conditional_entropy_bits(mixed) > 0.0);

  // Across random tables the score vanishes exactly when no column mixes.
  std::mt19937 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    auto table = random_table(rng, 6, 6);
    bool any_mixed = false;
    for (std::size_t c = 0; c < table.col_count(); ++c) {
      int positive = 0;
      for (std::size_t r = 0; r < table.row_count(); ++r)
        if (table.mass(r, c) > 0.0) ++positive;
      any_mixed = any_mixed || positive > 1;
    }
    CHECK((conditional_entropy_bits(table) > 0.0) == any_mixed);
  }
}

TEST_CASE("conditioning never increases entropy") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    auto table = random_table(rng);
    const double conditional = conditional_entropy_bits(table);
    CHECK(conditional >= 0.0);
    CHECK(conditional <= entropy_bits(table.row_marginal()) + 1e-9);
  }
}

TEST_CASE("chain rule residual vanishes on random tables") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    CHECK(std::abs(bayes_residual_bits(random_table(rng))) < 1e-9);
  }
}

TEST_CASE("entropy quantities are invariant under label permutation") {
  std::mt19937 rng(59);
  auto universe = random_universe(rng, 50);
  auto x = random_partition(rng, universe, 5);
  auto y = random_partition(rng, universe, 4);
  auto table = ContingencyTable::build(x, y);

  // Rebuild with the unit order reversed; first-appearance label order changes
  // but every entropy quantity must not.
  std::vector<Unit> reversed(universe->units().rbegin(), universe->units().rend());
  auto flipped = UnitUniverse::create(std::move(reversed));
  std::vector<std::string> x_labels(flipped->size()), y_labels(flipped->size());
  for (std::size_t u = 0; u < flipped->size(); ++u) {
    const std::size_t original = *universe->index_of(flipped->units()[u].id);
    x_labels[u] = x.label(original);
    y_labels[u] = y.label(original);
  }
  auto flipped_table = ContingencyTable::build(
      LabeledPartition(flipped, std::move(x_labels)),
      LabeledPartition(flipped, std::move(y_labels)));

  CHECK(std::abs(conditional_entropy_bits(table) -
                 conditional_entropy_bits(flipped_table)) < 1e-12);
  CHECK(std::abs(entropy_bits(table.row_marginal()) -
                 entropy_bits(flipped_table.row_marginal())) < 1e-12);
}

TEST_CASE("rescaling all unit weights leaves entropies in place") {
  std::mt19937 rng(73);
  auto universe = random_universe(rng, 40);
  auto x = random_partition(rng, universe, 4);
  auto y = random_partition(rng, universe, 5);

  std::vector<Unit> scaled_units = universe->units();
  for (Unit& unit : scaled_units) unit.weight *= 3.7;
  auto scaled = UnitUniverse::create(std::move(scaled_units));
  auto table = ContingencyTable::build(x, y);
  auto scaled_table = ContingencyTable::build(
      LabeledPartition(scaled, x.labels()), LabeledPartition(scaled, y.labels()));

  CHECK(std::abs(entropy_bits(table.row_marginal()) -
                 entropy_bits(scaled_table.row_marginal())) < 1e-12);
  CHECK(std::abs(conditional_entropy_bits(table) -
                 conditional_entropy_bits(scaled_table)) < 1e-12);
}

TEST_CASE("transposing the table swaps the conditioning direction") {
  std::mt19937 rng(61);
  auto table = random_table(rng);
  auto swapped = table.transposed();
  CHECK(table.row_labels() == swapped.col_labels());
  CHECK(table.col_labels() == swapped.row_labels());
  CHECK(std::abs(entropy_bits(table.row_marginal()) -
                 entropy_bits(swapped.col_marginal())) == 0.0);
}
