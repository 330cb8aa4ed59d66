#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "fibercone/monomial_ideal.hpp"
#include "fibercone/shape.hpp"

namespace fibercone::testsupport {

using Rng = std::mt19937_64;

// Concave sequences have nondecreasing a-decrements and nonincreasing
// b-increments; convex ones the other way around. With m <= 8 and steps
// <= 6 all exponents stay below 7*6 = 42.
inline MonomialIdeal random_shaped(Rng& rng, bool concave, std::size_t min_m = 2,
                                   std::size_t max_m = 8, std::uint64_t max_step = 6) {
  std::uniform_int_distribution<std::size_t> md(min_m, max_m);
  const std::size_t m = md(rng);
  std::uniform_int_distribution<std::uint64_t> sd(1, max_step);
  std::vector<std::uint64_t> da(m - 1), db(m - 1);
  for (auto& d : da) d = sd(rng);
  for (auto& d : db) d = sd(rng);
  if (concave) {
    std::sort(da.begin(), da.end());                    // a_i - a_(i+1) nondecreasing
    std::sort(db.begin(), db.end(), std::greater<>{});  // b_(i+1) - b_i nonincreasing
  } else {
    std::sort(da.begin(), da.end(), std::greater<>{});
    std::sort(db.begin(), db.end());
  }
  std::vector<ExpVec> gens(m);
  std::uint64_t a = 0;
  for (std::size_t i = m; i-- > 0;) {
    gens[i].a = a;
    if (i > 0) a += da[i - 1];
  }
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < m; ++i) {
    gens[i].b = b;
    if (i + 1 < m) b += db[i];
  }
  return make_ideal(std::move(gens));
}

inline MonomialIdeal random_concave(Rng& rng) { return random_shaped(rng, true); }
inline MonomialIdeal random_convex(Rng& rng) { return random_shaped(rng, false); }

inline MonomialIdeal random_with_inner_corner(Rng& rng, bool concave) {
  for (;;) {
    MonomialIdeal ideal = random_shaped(rng, concave, 3);
    if (classify_shape(ideal).has_inner_corner) return ideal;
  }
}

/// Arbitrary small ideal (no shape constraint), for algebraic identities.
inline MonomialIdeal random_ideal(Rng& rng, std::size_t max_points = 8,
                                  std::uint64_t max_exp = 30) {
  std::uniform_int_distribution<std::size_t> nd(1, max_points);
  std::uniform_int_distribution<std::uint64_t> ed(0, max_exp);
  const std::size_t n = nd(rng);
  std::vector<ExpVec> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) points.push_back({ed(rng), ed(rng)});
  return make_ideal(std::move(points));
}

}  // namespace fibercone::testsupport
