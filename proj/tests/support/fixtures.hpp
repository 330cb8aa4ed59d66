#pragma once

#include "fibercone/monomial_ideal.hpp"

namespace fibercone::testsupport {

/// The nine-generator concave ideal with corner points at indices 1, 3, 7, 9.
inline MonomialIdeal concave_m9() {
  return make_ideal({{10, 0}, {9, 2}, {8, 4}, {7, 5}, {6, 6}, {5, 7}, {4, 8}, {2, 9}, {0, 10}});
}

/// A second concave ideal whose product with concave_m9 fails to be concave.
inline MonomialIdeal concave_m5() {
  return make_ideal({{7, 0}, {6, 4}, {5, 7}, {3, 10}, {0, 13}});
}

/// Convex with inner corners at 2 and 4.
inline MonomialIdeal convex_m5() {
  return make_ideal({{12, 0}, {8, 1}, {5, 2}, {2, 3}, {0, 4}});
}

/// Convex; the product with convex_m5 fails to be convex.
inline MonomialIdeal convex_partner() {
  return make_ideal({{13, 0}, {7, 2}, {3, 6}, {1, 12}, {0, 20}});
}

}  // namespace fibercone::testsupport
