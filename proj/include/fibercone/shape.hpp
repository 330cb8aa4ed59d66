#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fibercone/monomial_ideal.hpp"

namespace fibercone {

/// Concave/convex classification of the exponent sequence of an ideal.
/// corner_indices are 1-based, always contain 1 and m, and list the
/// indices where the defining inequality is strict (for whichever
/// classification holds). Consecutive corners bound the line segments.
struct ShapeReport {
  bool is_concave = false;
  bool is_convex = false;
  std::vector<std::size_t> corner_indices;
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  bool has_inner_corner = false;

  friend bool operator==(const ShapeReport&, const ShapeReport&) = default;
};

/// Requires a normalized ideal with mu >= 2. Both flags are true exactly
/// when all the defining inequalities are equalities (the pure-power case),
/// and then corner_indices is just {1, m}.
ShapeReport classify_shape(const MonomialIdeal& ideal);

/// Segment index (0-based position into report.segments) for every
/// generator, in generator order. A generator sitting on a shared corner
/// is reported with the lower segment index. Verifies that each generator
/// is collinear with its segment endpoints.
std::vector<std::size_t> segment_membership(const MonomialIdeal& ideal, const ShapeReport& report);

/// True iff consecutive exponent differences are constant along every
/// segment. Holds for every concave or convex ideal; exposed as a
/// self-check.
bool check_equidistance(const MonomialIdeal& ideal, const ShapeReport& report);

}  // namespace fibercone
