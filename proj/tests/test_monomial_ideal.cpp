#include <doctest.h>

#include <set>

#include "fibercone/errors.hpp"
#include "fibercone/monomial_ideal.hpp"
#include "support/fixtures.hpp"
#include "support/random_ideals.hpp"

using namespace fibercone;
using namespace fibercone::testsupport;

TEST_CASE("make_ideal minimalizes and sorts") {
  const MonomialIdeal ideal = make_ideal({{2, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(ideal.gens() == std::vector<ExpVec>{{1, 0}, {0, 1}});

  const MonomialIdeal big = concave_m9();
  CHECK(big.mu() == 9);
  CHECK(big.gen(1) == ExpVec{10, 0});
  CHECK(big.gen(9) == ExpVec{0, 10});

  CHECK(make_ideal({{3, 3}}).gens() == std::vector<ExpVec>{{3, 3}});
  CHECK_THROWS_AS(make_ideal({}), InvalidIdeal);
}

TEST_CASE("make_ideal is idempotent on random input") {
  Rng rng(140001);
  for (int round = 0; round < 50; ++round) {
    const MonomialIdeal ideal = random_ideal(rng);
    CHECK(make_ideal(ideal.gens()) == ideal);
  }
}

TEST_CASE("normalize divides out the common factor") {
  const auto [reduced, factor] = normalize(make_ideal({{3, 1}, {2, 2}, {1, 3}}));
  CHECK(factor == ExpVec{1, 1});
  CHECK(reduced == make_ideal({{2, 0}, {1, 1}, {0, 2}}));

  const auto [same, zero] = normalize(concave_m9());
  CHECK(zero == ExpVec{0, 0});
  CHECK(same == concave_m9());

  const auto [unit, principal] = normalize(make_ideal({{5, 0}}));
  CHECK(principal == ExpVec{5, 0});
  CHECK(unit.is_unit());
  CHECK(unit.mu() == 1);
}

TEST_CASE("normalized ideals have zero corner exponents and trivial gcd") {
  Rng rng(140002);
  for (int round = 0; round < 50; ++round) {
    const auto [reduced, factor] = normalize(random_ideal(rng));
    CHECK(reduced.is_normalized());
    std::uint64_t ga = UINT64_MAX, gb = UINT64_MAX;
    for (ExpVec g : reduced.gens()) {
      ga = std::min(ga, g.a);
      gb = std::min(gb, g.b);
    }
    CHECK(ga == 0);
    CHECK(gb == 0);
  }
}

TEST_CASE("multiply matches the listed product generators") {
  CHECK(multiply(make_ideal({{1, 0}, {0, 1}}), make_ideal({{1, 0}, {0, 1}})) ==
        make_ideal({{2, 0}, {1, 1}, {0, 2}}));

  // Product of the two concave fixtures: fourteen generators.
  const MonomialIdeal product = multiply(concave_m9(), concave_m5());
  const MonomialIdeal expected = make_ideal({{17, 0},
                                             {16, 2},
                                             {15, 4},
                                             {14, 5},
                                             {13, 6},
                                             {12, 7},
                                             {11, 8},
                                             {9, 9},
                                             {7, 10},
                                             {6, 14},
                                             {5, 17},
                                             {3, 20},
                                             {2, 22},
                                             {0, 23}});
  CHECK(product == expected);
  CHECK(product.mu() == 14);

  // Product of the two convex fixtures: eleven generators.
  const MonomialIdeal convex_product = multiply(convex_m5(), convex_partner());
  const MonomialIdeal convex_expected = make_ideal({{25, 0},
                                                    {21, 1},
                                                    {18, 2},
                                                    {15, 3},
                                                    {12, 4},
                                                    {9, 5},
                                                    {7, 6},
                                                    {5, 9},
                                                    {3, 10},
                                                    {1, 16},
                                                    {0, 24}});
  CHECK(convex_product == convex_expected);
}

TEST_CASE("multiply commutes and every product generator is a pairwise product") {
  Rng rng(140003);
  for (int round = 0; round < 30; ++round) {
    const MonomialIdeal lhs = random_ideal(rng);
    const MonomialIdeal rhs = random_ideal(rng);
    const MonomialIdeal product = multiply(lhs, rhs);
    CHECK(product == multiply(rhs, lhs));
    for (ExpVec g : product.gens()) {
      bool found = false;
      for (ExpVec u : lhs.gens()) {
        for (ExpVec v : rhs.gens()) {
          if (add(u, v) == g) found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("power basics and the recurrence") {
  CHECK(power(make_ideal({{1, 0}, {0, 1}}), 2) == make_ideal({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(power(concave_m9(), 0).is_unit());
  CHECK(power(concave_m9(), 2).mu() == 17);
  CHECK(power(make_ideal({{3, 0}, {1, 1}, {0, 3}}), 2) ==
        make_ideal({{6, 0}, {4, 1}, {2, 2}, {1, 4}, {0, 6}}));

  Rng rng(140004);
  for (int round = 0; round < 10; ++round) {
    const MonomialIdeal ideal = random_ideal(rng);
    for (std::uint64_t k = 0; k < 3; ++k)
      CHECK(power(ideal, k + 1) == multiply(power(ideal, k), ideal));
  }
}

TEST_CASE("membership in m times a power") {
  const MonomialIdeal xy = make_ideal({{1, 0}, {0, 1}});
  CHECK(member_of_m_times_power(xy, 1, {1, 1}));
  CHECK_FALSE(member_of_m_times_power(xy, 1, {1, 0}));

  const MonomialIdeal ideal = make_ideal({{3, 0}, {1, 1}, {0, 3}});
  CHECK(member_of_m_times_power(ideal, 2, {3, 3}));

  CHECK_THROWS_AS(member_of_m_times_power(xy, 0, {1, 1}), NotApplicable);
}

TEST_CASE("checked arithmetic rejects overflow") {
  const std::uint64_t huge = UINT64_MAX - 1;
  CHECK_THROWS_AS(multiply(make_ideal({{huge, 0}}), make_ideal({{huge, 0}})), Overflow);
  CHECK_THROWS_AS(power(make_ideal({{huge, 0}, {0, huge}}), 3), Overflow);
}

TEST_CASE("gen is one-based and bounds-checked") {
  const MonomialIdeal ideal = concave_m9();
  CHECK(ideal.gen(3) == ExpVec{8, 4});
  CHECK_THROWS_AS(ideal.gen(0), IndexError);
  CHECK_THROWS_AS(ideal.gen(10), IndexError);
}
