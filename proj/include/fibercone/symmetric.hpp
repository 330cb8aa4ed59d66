#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fibercone/monomial_ideal.hpp"
#include "fibercone/presentation.hpp"

namespace fibercone {

/// A symmetric ideal is determined by its a-sequence alone: the b-sequence
/// is the a-sequence reversed.
struct SymmetricSpec {
  std::vector<std::uint64_t> a_sequence;  // strictly decreasing, ends in 0
};

MonomialIdeal make_symmetric(const SymmetricSpec& spec);

/// The generators read b_i = a_(m-i+1).
bool is_symmetric(const MonomialIdeal& ideal);

/// The depth-zero family with a-sequence (5m, 4m, 4m-1, ..., 3m+4, m, 0);
/// generated in the two degrees 5m and 7m+3.
MonomialIdeal tiny_squares_ideal(std::uint64_t m);

enum class SymVerdict {
  CM_Concave,
  CM_Convex,
  CM_SmallC,
  CM_LargeC,
  CM_Equigen,
  NotCM_Equigen,
  UnknownInterval,
};

std::string to_string(SymVerdict verdict);

/// Classification of the 4-generated symmetric ideal (x^c, x^b y^a,
/// x^a y^b, y^c) with 0 < a < b < c and gcd(a, b, c) = 1. The first
/// matching rule wins: equigenerated (c = a+b), small c (2a >= c), large c
/// (c beyond r(b-a)+a with r = ceil(b/(b-a))), concave/convex, and
/// otherwise the open interval. Small-c and large-c verdicts carry their
/// monomial presentation, verified against the power oracle.
struct Symmetric4Report {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t r = 0;
  SymVerdict verdict = SymVerdict::UnknownInterval;
  std::pair<std::uint64_t, std::uint64_t> interval{0, 0};
  std::vector<ZMonomial> presentation;  // in 4 variables when attached

  friend bool operator==(const Symmetric4Report&, const Symmetric4Report&) = default;
};

Symmetric4Report classify_symmetric4(std::uint64_t a, std::uint64_t b, std::uint64_t c);

/// Classification of the shifted triple (a+shift, b+shift, c+shift); the
/// shifted triple must still be coprime. For shift >= c - 2a the verdict is
/// always CM_SmallC.
Symmetric4Report shifted_family_check(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                      std::uint64_t shift);

/// For a large-c triple, checks that G(I^k) is exactly the union of the two
/// sliced product families (k_1 = 0, or k_1 > 0 and k_3 < r - 1; and its
/// mirror), with overlap G((u_2, u_3)^k); each family equals the generator
/// set of its 3-generated subideal.
bool verify_35b_generators(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t k);

}  // namespace fibercone
