#pragma once

#include <compare>
#include <cstdint>

#include "fibercone/errors.hpp"

namespace fibercone {

/// Exponent vector (a, b) of a monomial x^a y^b. Comparison is the
/// lexicographic order on monomials: (a, b) > (c, d) iff a > c, or
/// a = c and b > d.
struct ExpVec {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend constexpr auto operator<=>(const ExpVec&, const ExpVec&) = default;
};

inline std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw Overflow("exponent sum exceeds 64 bits");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw Overflow("exponent product exceeds 64 bits");
  return r;
}

inline ExpVec add(ExpVec u, ExpVec v) { return {checked_add(u.a, v.a), checked_add(u.b, v.b)}; }

inline ExpVec scaled(ExpVec u, std::uint64_t k) {
  return {checked_mul(u.a, k), checked_mul(u.b, k)};
}

/// u divides v componentwise.
constexpr bool divides(ExpVec u, ExpVec v) { return u.a <= v.a && u.b <= v.b; }

/// u divides v and u != v.
constexpr bool strictly_divides(ExpVec u, ExpVec v) { return divides(u, v) && u != v; }

/// v / u; the caller must ensure divisibility.
constexpr ExpVec quotient(ExpVec v, ExpVec u) { return {v.a - u.a, v.b - u.b}; }

inline std::uint64_t total_degree(ExpVec u) { return checked_add(u.a, u.b); }

}  // namespace fibercone
