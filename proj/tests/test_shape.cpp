#include <doctest.h>

#include "fibercone/errors.hpp"
#include "fibercone/shape.hpp"
#include "support/fixtures.hpp"
#include "support/random_ideals.hpp"

using namespace fibercone;
using namespace fibercone::testsupport;

namespace {

bool leq(ExpVec lhs, ExpVec rhs) { return lhs.a <= rhs.a && lhs.b <= rhs.b; }
bool geq(ExpVec lhs, ExpVec rhs) { return lhs.a >= rhs.a && lhs.b >= rhs.b; }

}  // namespace

TEST_CASE("classification of the fixture ideals") {
  const ShapeReport big = classify_shape(concave_m9());
  CHECK(big.is_concave);
  CHECK_FALSE(big.is_convex);
  CHECK(big.corner_indices == std::vector<std::size_t>{1, 3, 7, 9});
  CHECK(big.has_inner_corner);

  const ShapeReport both = classify_shape(make_ideal({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(both.is_concave);
  CHECK(both.is_convex);
  CHECK(both.corner_indices == std::vector<std::size_t>{1, 3});
  CHECK_FALSE(both.has_inner_corner);

  const ShapeReport neither = classify_shape(make_ideal({{9, 0}, {5, 3}, {3, 5}, {0, 9}}));
  CHECK_FALSE(neither.is_concave);
  CHECK_FALSE(neither.is_convex);
}

TEST_CASE("classification guards its preconditions") {
  CHECK_THROWS_AS(classify_shape(make_ideal({{3, 3}})), NotApplicable);
  CHECK_THROWS_AS(classify_shape(make_ideal({{3, 1}, {1, 2}})), NotNormalized);
}

TEST_CASE("segment membership follows the corner decomposition") {
  const MonomialIdeal big = concave_m9();
  const ShapeReport report = classify_shape(big);
  CHECK(segment_membership(big, report) ==
        std::vector<std::size_t>{0, 0, 0, 1, 1, 1, 1, 2, 2});

  const MonomialIdeal small = make_ideal({{2, 0}, {1, 1}, {0, 2}});
  CHECK(segment_membership(small, classify_shape(small)) == std::vector<std::size_t>{0, 0, 0});

  const MonomialIdeal corners = make_ideal({{3, 0}, {2, 1}, {0, 2}});
  const ShapeReport corner_report = classify_shape(corners);
  CHECK(corner_report.corner_indices == std::vector<std::size_t>{1, 2, 3});
  CHECK(segment_membership(corners, corner_report) == std::vector<std::size_t>{0, 0, 1});

  const MonomialIdeal unshaped = make_ideal({{9, 0}, {5, 3}, {3, 5}, {0, 9}});
  CHECK_THROWS_AS(segment_membership(unshaped, classify_shape(unshaped)), NotApplicable);
}

TEST_CASE("equidistance holds along every segment") {
  const MonomialIdeal big = concave_m9();
  CHECK(check_equidistance(big, classify_shape(big)));

  const MonomialIdeal single = make_ideal({{4, 0}, {2, 1}, {0, 2}});
  CHECK(check_equidistance(single, classify_shape(single)));

  const MonomialIdeal unshaped = make_ideal({{9, 0}, {5, 3}, {3, 5}, {0, 9}});
  CHECK_THROWS_AS(check_equidistance(unshaped, classify_shape(unshaped)), NotApplicable);
}

TEST_CASE("pair sums dominate shifted pair sums with strictness at corners") {
  Rng rng(150001);
  for (int round = 0; round < 40; ++round) {
    const bool concave = round % 2 == 0;
    const MonomialIdeal ideal = random_shaped(rng, concave);
    const ShapeReport report = classify_shape(ideal);
    const auto& c = ideal.gens();
    const std::size_t m = c.size();
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = i; j <= m; ++j) {
        for (std::size_t k = 1; i > k && j + k <= m; ++k) {
          const ExpVec inner = add(c[i - 1], c[j - 1]);
          const ExpVec outer = add(c[i - k - 1], c[j + k - 1]);
          if (report.is_concave)
            CHECK(geq(inner, outer));
          else if (report.is_convex)
            CHECK(leq(inner, outer));
          bool corner_between = false;
          for (std::size_t r : report.corner_indices)
            if (i < r && r < j) corner_between = true;
          if (corner_between) CHECK(inner != outer);
        }
      }
    }
  }
}

TEST_CASE("doubly classified ideals are collinear and equidistant") {
  Rng rng(150002);
  int seen = 0;
  while (seen < 5) {
    const MonomialIdeal ideal = random_shaped(rng, true, 2, 5, 3);
    const ShapeReport report = classify_shape(ideal);
    if (!(report.is_concave && report.is_convex)) continue;
    ++seen;
    CHECK(report.corner_indices == std::vector<std::size_t>{1, ideal.mu()});
    segment_membership(ideal, report);  // collinearity is verified inside
    CHECK(check_equidistance(ideal, report));
  }
}
