#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fibercone/monomial_ideal.hpp"
#include "fibercone/shape.hpp"

namespace fibercone {

/// Outcome of searching for the reduction number of I with respect to J.
/// When reduction_number is present, I^(r+1) = J*I^r was verified and r is
/// least with that property. When absent, witness holds (k, u) with
/// u in G(I^k) \ J*I^(k-1) for k = search_bound + 1; since reductions are
/// stable under raising the exponent, that single witness rules out every
/// r <= search_bound.
struct ReductionResult {
  MonomialIdeal reduction;
  std::optional<std::uint64_t> reduction_number;
  std::uint64_t search_bound = 0;
  std::optional<std::pair<std::uint64_t, ExpVec>> witness;
};

/// Closed-form generators of I^k for concave I: the top slice
/// u_1^k, u_1^(k-1)u_2, ..., u_1^(k-1)u_m together with the slices
/// u_1^(k-i) u_m^(i-1) {u_2..u_m} for i = 2..k. Exactly (m-1)k + 1
/// elements, returned lex-descending.
std::vector<ExpVec> concave_power_gens(const MonomialIdeal& ideal, std::uint64_t k);

/// Closed-form generators of I^k for convex I: the union over adjacent
/// generator pairs of {u_i^l u_(i+1)^(k-l)}; adjacent blocks overlap in the
/// single monomial u_(i+1)^k. Exactly (m-1)k + 1 elements, lex-descending.
std::vector<ExpVec> convex_power_gens(const MonomialIdeal& ideal, std::uint64_t k);

/// The pure-power candidate reduction (u_1, u_m).
MonomialIdeal pure_power_reduction(const MonomialIdeal& ideal);

/// max(8, a_1): a constant bound would silently fail on families whose
/// reduction number grows with the exponents.
std::uint64_t default_reduction_bound(const MonomialIdeal& ideal);

/// Least r <= bound with I^(r+1) = J*I^r, or a witness of failure.
ReductionResult reduction_number(const MonomialIdeal& ideal, const MonomialIdeal& reduction,
                                 std::uint64_t bound);

struct PurePower {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t k = 0;

  friend bool operator==(const PurePower&, const PurePower&) = default;
};

/// I = (x^a, y^b)^k exactly when I has no inner corner points; the
/// reconstruction is verified before returning.
std::optional<PurePower> detect_pure_power(const MonomialIdeal& ideal);

/// Shape classification of I^k for k = 1..kmax, with the power-shape
/// theorems enforced as self-checks: convex ideals have all powers convex,
/// concave ideals with an inner corner have no concave proper power, and
/// corner-free ideals stay concave.
std::vector<std::pair<std::uint64_t, ShapeReport>> power_shape_report(const MonomialIdeal& ideal,
                                                                      std::uint64_t kmax);

}  // namespace fibercone
