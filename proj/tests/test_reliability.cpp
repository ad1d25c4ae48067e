#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "ckn/reliability.hpp"

using namespace ckn;

namespace {

// Per-state oracle through the public structure function, no bucketing.
double naive_exact_reliability(const TieSetCatalog& catalog, double r) {
  const int n = catalog.config().n();
  double total = 0.0;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    StateVector state = StateVector::from_mask(x, n);
    if (structure_function(state, catalog) == 0) continue;
    int up = std::popcount(x);
    total += std::pow(r, up) * std::pow(1.0 - r, n - up);
  }
  return total;
}

std::vector<double> grid_101() {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
  return grid;
}

}  // namespace

TEST_CASE("state vectors validate their entries") {
  StateVector x({1, 0, 1, 1});
  CHECK(x.size() == 4);
  CHECK(x.mask() == 0b1101);
  CHECK(StateVector::from_mask(0b1101, 4).states() == std::vector<int>{1, 0, 1, 1});
  CHECK_THROWS_AS(StateVector({1, 2}), OutOfRangeError);
  CHECK_THROWS_AS(StateVector({}), EmptySetError);
}

TEST_CASE("structure function checks tie-set containment") {
  TieSetCatalog catalog = enumerate_minimum_tiesets(SystemConfig(6, 2), BalanceCondition::BC1);

  CHECK(structure_function(StateVector({1, 1, 1, 1, 1, 1}), catalog) == 1);
  CHECK(structure_function(StateVector::from_mask(UnitSet({1, 4}, 6).mask(), 6), catalog) == 1);
  CHECK(structure_function(StateVector::from_mask(UnitSet({1, 2}, 6).mask(), 6), catalog) == 0);
  CHECK(structure_function(StateVector::from_mask(0b001001, 6), catalog) == 1);  // {1,4}

  CHECK_THROWS_AS(structure_function(StateVector({1, 1}), catalog), LengthMismatchError);
}

TEST_CASE("product-form reliability follows the factorization") {
  TieSetCatalog single = enumerate_minimum_tiesets(SystemConfig(4, 4), BalanceCondition::BC3);
  REQUIRE(single.size() == 1);
  for (double r : {0.0, 0.3, 0.5, 0.9, 1.0})
    CHECK(reliability_product(single, r) == doctest::Approx(std::pow(r, 4)));

  TieSetCatalog disjoint = enumerate_minimum_tiesets(SystemConfig(6, 2), BalanceCondition::BC1);
  CHECK(reliability_product(disjoint, 0.5) == doctest::Approx(0.578125).epsilon(1e-12));
  CHECK(reliability_product(disjoint, 0.0) == 0.0);
  CHECK(reliability_product(disjoint, 1.0) == 1.0);

  TieSetCatalog empty = enumerate_minimum_tiesets(SystemConfig(5, 5), BalanceCondition::BC1);
  CHECK(reliability_product(empty, 0.7) == 0.0);

  CHECK_THROWS_AS(reliability_product(disjoint, -0.1), InvalidUnitReliabilityError);
  CHECK_THROWS_AS(reliability_product(disjoint, 1.1), InvalidUnitReliabilityError);
}

TEST_CASE("exact reliability by state enumeration") {
  TieSetCatalog disjoint = enumerate_minimum_tiesets(SystemConfig(6, 2), BalanceCondition::BC1);
  CHECK(reliability_exact(disjoint, 0.5) == doctest::Approx(0.578125).epsilon(1e-12));
  CHECK(reliability_exact(disjoint, 0.0) == 0.0);
  CHECK(reliability_exact(disjoint, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  // disjoint tie-sets make the product form exact
  for (double r : grid_101())
    CHECK(std::abs(reliability_exact(disjoint, r) - reliability_product(disjoint, r)) < 1e-12);

  CHECK_THROWS_AS(reliability_exact(disjoint, 1.5), InvalidUnitReliabilityError);
  CHECK_THROWS_AS(
      reliability_exact(enumerate_minimum_tiesets(SystemConfig(25, 24),
                                                  BalanceCondition::BC1,
                                                  kDefaultBalanceTol, 25),
                        0.5),
      TooLargeError);
}

TEST_CASE("exact reliability agrees with the per-state oracle") {
  for (auto [n, k] : {std::pair{6, 2}, {8, 3}, {12, 4}}) {
    TieSetCatalog catalog =
        enumerate_minimum_tiesets(SystemConfig(n, k), BalanceCondition::BC3);
    for (double r : {0.2, 0.5, 0.7})
      CHECK(std::abs(reliability_exact(catalog, r) - naive_exact_reliability(catalog, r)) < 1e-12);
  }
}

TEST_CASE("operational profile counts are consistent") {
  TieSetCatalog catalog = enumerate_minimum_tiesets(SystemConfig(12, 4), BalanceCondition::BC3);
  OperationalProfile profile(catalog);
  REQUIRE(profile.counts().size() == 13);
  CHECK(profile.counts()[12] == 1);  // all-up state always works
  for (int j = 0; j < 4; ++j) CHECK(profile.counts()[j] == 0);  // under k units

  // no operational count can exceed the number of j-subsets
  auto choose = [](int n, int j) {
    double c = 1;
    for (int i = 0; i < j; ++i) c = c * (n - i) / (i + 1);
    return static_cast<std::uint64_t>(c + 0.5);
  };
  for (int j = 0; j <= 12; ++j) CHECK(profile.counts()[j] <= choose(12, j));
}

TEST_CASE("product form upper-bounds the exact reliability") {
  TieSetCatalog overlapping = enumerate_minimum_tiesets(SystemConfig(12, 4), BalanceCondition::BC3);
  OperationalProfile profile(overlapping);
  bool strictly_below_somewhere = false;
  for (double r : grid_101()) {
    double exact = profile.reliability(r);
    double product = reliability_product(overlapping, r);
    CHECK(exact <= product + 1e-12);
    if (exact < product - 1e-6) strictly_below_somewhere = true;
  }
  // overlapping tie-sets make the factorization a strict upper bound
  CHECK(strictly_below_somewhere);
}

TEST_CASE("reliability is monotone in r with fixed endpoints") {
  for (BalanceCondition condition : kAllConditions) {
    TieSetCatalog catalog = enumerate_minimum_tiesets(SystemConfig(10, 4), condition);
    REQUIRE(!catalog.empty());
    OperationalProfile profile(catalog);
    double prev_product = -1.0, prev_exact = -1.0;
    for (double r : grid_101()) {
      double product = reliability_product(catalog, r);
      double exact = profile.reliability(r);
      CHECK(product >= prev_product - 1e-12);
      CHECK(exact >= prev_exact - 1e-12);
      prev_product = product;
      prev_exact = exact;
    }
    CHECK(reliability_product(catalog, 0.0) == 0.0);
    CHECK(reliability_product(catalog, 1.0) == 1.0);
  }
}

TEST_CASE("monte carlo simulation of the structure function agrees with exact") {
  TieSetCatalog catalog = enumerate_minimum_tiesets(SystemConfig(12, 4), BalanceCondition::BC3);
  const double r = 0.7;
  const int samples = 1'000'000;
  std::mt19937 rng(987654321u);
  std::bernoulli_distribution unit_up(r);

  std::int64_t working = 0;
  for (int i = 0; i < samples; ++i) {
    Mask x = 0;
    for (int unit = 0; unit < 12; ++unit)
      if (unit_up(rng)) x |= Mask{1} << unit;
    for (const UnitSet& t : catalog.tiesets())
      if ((x & t.mask()) == t.mask()) {
        ++working;
        break;
      }
  }
  double estimate = static_cast<double>(working) / samples;
  double exact = reliability_exact(catalog, r);
  double stderr_est = std::sqrt(estimate * (1.0 - estimate) / samples);
  CHECK(std::abs(estimate - exact) < 3.0 * stderr_est);
}

TEST_CASE("sweep produces one row per config, condition and r") {
  std::vector<SystemConfig> configs = {SystemConfig(12, 4), SystemConfig(12, 6),
                                       SystemConfig(12, 8)};
  std::vector<BalanceCondition> conditions(kAllConditions, kAllConditions + 3);
  ReliabilityTable table = sweep(configs, conditions, grid_101(), false);
  REQUIRE(table.rows.size() == 909);
  CHECK(table.errors.empty());

  // deterministic ordering: config-major, then condition, then r
  CHECK(table.rows[0].n == 12);
  CHECK(table.rows[0].k == 4);
  CHECK(table.rows[0].condition == BalanceCondition::BC1);
  CHECK(table.rows[0].r == 0.0);
  CHECK(table.rows[100].r == 1.0);
  CHECK(table.rows[101].condition == BalanceCondition::BC2);
  CHECK(table.rows[303].k == 6);
  for (const ReliabilityRow& row : table.rows) CHECK(!row.r_exact.has_value());

  ReliabilityTable with_exact = sweep({SystemConfig(6, 2)}, {BalanceCondition::BC1},
                                      {0.5}, true);
  REQUIRE(with_exact.rows.size() == 1);
  REQUIRE(with_exact.rows[0].r_exact.has_value());
  CHECK(*with_exact.rows[0].r_exact == doctest::Approx(0.578125).epsilon(1e-12));

  CHECK(sweep(configs, conditions, {}, false).rows.empty());
}

TEST_CASE("sweep records enumeration failures instead of dying") {
  ReliabilityTable table = sweep({SystemConfig(25, 2), SystemConfig(6, 2)},
                                 {BalanceCondition::BC1}, {0.5}, false);
  REQUIRE(table.errors.size() == 1);
  CHECK(table.errors[0].n == 25);
  CHECK(table.errors[0].k == 2);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].n == 6);

  CHECK_THROWS_AS(sweep({SystemConfig(6, 2)}, {BalanceCondition::BC1}, {1.5}, false),
                  InvalidUnitReliabilityError);
}

TEST_CASE("count table reports the three catalog sizes and differences") {
  std::vector<CountRow> rows = count_table({SystemConfig(12, 4)});
  REQUIRE(rows.size() == 1);
  CHECK((rows[0] == CountRow{4, 12, 15, 19, 31, 4, 12}));

  rows = count_table(std::vector<int>{10}, std::vector<int>{12});  // k > n skipped
  CHECK(rows.empty());

  rows = count_table(std::vector<int>{12, 14}, std::vector<int>{6, 10});
  REQUIRE(rows.size() == 4);
  CHECK((rows[0] == CountRow{6, 12, 11, 15, 36, 4, 21}));
  CHECK((rows[1] == CountRow{10, 12, 6, 6, 6, 0, 0}));
  CHECK((rows[2] == CountRow{6, 14, 21, 23, 37, 2, 14}));
  CHECK((rows[3] == CountRow{10, 14, 21, 21, 21, 0, 0}));
}

TEST_CASE("reliability csv uses 12 significant digits and optional exact column") {
  ReliabilityTable table = sweep({SystemConfig(6, 2)}, {BalanceCondition::BC1},
                                 {0.5}, true);
  CHECK(to_csv(table) ==
        "n,k,condition,r,R_product,R_exact\n"
        "6,2,BC1,0.5,0.578125,0.578125\n");

  ReliabilityTable no_exact = sweep({SystemConfig(6, 2)}, {BalanceCondition::BC1},
                                    {0.5}, false);
  CHECK(to_csv(no_exact) ==
        "n,k,condition,r,R_product,R_exact\n"
        "6,2,BC1,0.5,0.578125,\n");

  CHECK(format_real(1.0 / 3.0) == "0.333333333333");
  CHECK(format_real(1.0) == "1");
}

TEST_CASE("count table csv matches the documented schema") {
  std::string csv = to_csv(count_table({SystemConfig(6, 2), SystemConfig(12, 4)}));
  CHECK(csv ==
        "k,n,bc1,bc2,bc3,diff21,diff32\n"
        "2,6,3,5,5,2,0\n"
        "4,12,15,19,31,4,12\n");
}

TEST_CASE("json renderings carry rows and errors") {
  ReliabilityTable table = sweep({SystemConfig(6, 2)}, {BalanceCondition::BC1}, {0.5}, false);
  std::string json = to_json_string(table);
  CHECK(json.find("\"R_product\": 0.578125") != std::string::npos);
  CHECK(json.find("\"R_exact\": null") != std::string::npos);

  std::string counts = to_json_string(count_table({SystemConfig(6, 2)}));
  CHECK(counts.find("\"bc2\": 5") != std::string::npos);
}
