#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibercone/monomial_ideal.hpp"

namespace fibercone {

/// Monomial in the presentation variables z_1..z_m, stored as its exponent
/// sequence.
struct ZMonomial {
  std::vector<std::uint32_t> exps;

  std::uint64_t degree() const;

  friend bool operator==(const ZMonomial&, const ZMonomial&) = default;
  friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;
};

ZMonomial zm_one(std::size_t num_vars);
/// z_i^e with 1-based i.
ZMonomial zm_var(std::size_t num_vars, std::size_t i, std::uint32_t e = 1);
ZMonomial zm_mul(const ZMonomial& lhs, const ZMonomial& rhs);
bool zm_divides(const ZMonomial& div, const ZMonomial& target);
ZMonomial zm_div(const ZMonomial& target, const ZMonomial& div);
ZMonomial zm_lcm(const ZMonomial& lhs, const ZMonomial& rhs);
std::string zm_to_string(const ZMonomial& mono);

enum class TermOrder { RevLex, Lex };

/// +1 if lhs > rhs, 0 if equal, -1 otherwise. Lex compares exponents from
/// z_1 down; RevLex is degree first, then smaller exponent at the last
/// differing variable wins.
int zm_compare(const ZMonomial& lhs, const ZMonomial& rhs, TermOrder order);

/// Difference of two monomials with coefficients +1, -1; lead > trail under
/// the presentation's term order.
struct ZBinomial {
  ZMonomial lead;
  ZMonomial trail;

  friend bool operator==(const ZBinomial&, const ZBinomial&) = default;
};

/// Generators of the defining ideal L of the fiber cone F(I) =
/// K[z_1..z_m]/L of a concave or convex ideal: the 2-minor binomials of the
/// segment matrices plus the quadratic monomials passing the membership
/// test. Concave presentations carry RevLex, convex ones Lex.
struct PresentationIdeal {
  std::size_t num_vars = 0;
  TermOrder order = TermOrder::RevLex;
  std::vector<ZBinomial> binomials;
  std::vector<ZMonomial> monomials;

  friend bool operator==(const PresentationIdeal&, const PresentationIdeal&) = default;
};

PresentationIdeal build_presentation(const MonomialIdeal& ideal);

/// u_i * u_j lies in m*I^2 (indices 1-based); equivalently z_i z_j is a
/// relation of the fiber cone.
bool relation_membership_test(const MonomialIdeal& ideal, std::size_t i, std::size_t j);

/// Every S-polynomial of a pair of generators reduces to zero. All
/// intermediate values stay monomials or +/- binomials, so the reduction
/// engine never needs general polynomial arithmetic.
bool groebner_selfcheck(const PresentationIdeal& presentation);

/// Leading terms of the generators, checked against the predicted initial
/// ideal: (z_2..z_(m-1))^2 in the concave case, the non-adjacent squarefree
/// quadrics in the convex case.
std::vector<ZMonomial> initial_ideal(const PresentationIdeal& presentation);

/// Number of degree-k monomials in num_vars variables divisible by none of
/// the blockers.
std::uint64_t standard_monomial_count(std::span<const ZMonomial> blockers, std::size_t num_vars,
                                      std::uint64_t degree);

/// mu(I^k) for k = 0..K, plus the numerator of the Hilbert series over
/// (1-t)^2 when the second differences of the sequence stabilize at zero
/// within the window.
struct HilbertData {
  std::vector<std::uint64_t> mu;
  std::optional<std::vector<std::int64_t>> numerator;

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

HilbertData hilbert_data(const MonomialIdeal& ideal, std::uint64_t degree_bound);

std::string to_string(const PresentationIdeal& presentation);

}  // namespace fibercone
