#include <doctest.h>

#include <numeric>
#include <vector>

#include "ckn/core.hpp"

using namespace ckn;

TEST_CASE("system config validates its ranges") {
  SystemConfig config(12, 4);
  CHECK(config.n() == 12);
  CHECK(config.k() == 4);

  CHECK_THROWS_AS(SystemConfig(2, 1), OutOfRangeError);
  CHECK_THROWS_AS(SystemConfig(6, 0), OutOfRangeError);
  CHECK_THROWS_AS(SystemConfig(6, 7), OutOfRangeError);
  CHECK_NOTHROW(SystemConfig(3, 3));
}

TEST_CASE("unit set construction normalizes and validates") {
  UnitSet u({4, 1, 5}, 12);
  CHECK(u.units() == std::vector<int>{1, 4, 5});
  CHECK(u.size() == 3);
  CHECK(u.mask() == ((1u << 0) | (1u << 3) | (1u << 4)));
  CHECK(u.contains(4));
  CHECK(!u.contains(2));

  CHECK_THROWS_AS(UnitSet({}, 6), EmptySetError);
  CHECK_THROWS_AS(UnitSet({1, 1}, 6), DuplicateError);
  CHECK_THROWS_AS(UnitSet({13}, 12), OutOfRangeError);
  CHECK_THROWS_AS(UnitSet({0}, 12), OutOfRangeError);
}

TEST_CASE("unit set round-trips through its mask") {
  UnitSet u({2, 7, 11}, 12);
  CHECK(UnitSet::from_mask(u.mask(), 12) == u);
  CHECK_THROWS_AS(UnitSet::from_mask(0, 6), EmptySetError);
  CHECK_THROWS_AS(UnitSet::from_mask(Mask{1} << 6, 6), OutOfRangeError);
}

TEST_CASE("distance tuple follows the circular gap definition") {
  CHECK(distance_tuple(UnitSet({4, 5, 6, 10, 11, 12}, 12)).gaps ==
        std::vector<int>{1, 1, 4, 1, 1, 4});
  CHECK(distance_tuple(UnitSet({4, 8, 12}, 12)).gaps == std::vector<int>{4, 4, 4});
  CHECK(distance_tuple(UnitSet({7}, 12)).gaps == std::vector<int>{12});
}

TEST_CASE("distance tuples close the circle for every subset") {
  for (int n = 3; n <= 12; ++n) {
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
      UnitSet u = UnitSet::from_mask(m, n);
      DistanceTuple d = distance_tuple(u);
      CHECK(static_cast<int>(d.gaps.size()) == u.size());
      CHECK(std::accumulate(d.gaps.begin(), d.gaps.end(), 0) == n);
      for (int gap : d.gaps) CHECK(gap >= 1);
    }
  }
}

TEST_CASE("rotation relabels indices and cycles the distance tuple") {
  UnitSet u({1, 4, 5, 9, 10}, 12);
  for (int c = -13; c <= 13; ++c) {
    UnitSet v = rotated(u, c);
    CHECK(v.size() == u.size());

    // same gap multiset, cyclically shifted
    DistanceTuple du = distance_tuple(u);
    DistanceTuple dv = distance_tuple(v);
    bool is_cyclic_shift = false;
    const int m = static_cast<int>(du.gaps.size());
    for (int shift = 0; shift < m && !is_cyclic_shift; ++shift) {
      bool match = true;
      for (int i = 0; i < m; ++i)
        if (du.gaps[(i + shift) % m] != dv.gaps[i]) {
          match = false;
          break;
        }
      is_cyclic_shift = match;
    }
    CHECK(is_cyclic_shift);
  }
  CHECK(rotated(u, 12) == u);
  CHECK(rotated(rotated(u, 5), -5) == u);
}

TEST_CASE("canonical order is cardinality-major, then lexicographic") {
  UnitSet a({1, 4}, 6), b({2, 5}, 6), c({1, 3, 5}, 6);
  CHECK(canonical_less(a, b));
  CHECK(canonical_less(b, c));
  CHECK(canonical_less(a, c));
  CHECK(!canonical_less(a, a));
}

TEST_CASE("balance condition names round-trip") {
  for (BalanceCondition c : kAllConditions) {
    auto parsed = balance_condition_from_string(to_string(c));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == c);
  }
  CHECK(balance_condition_from_string("bc2") == BalanceCondition::BC2);
  CHECK(!balance_condition_from_string("bc4").has_value());
}
