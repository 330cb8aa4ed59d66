#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace fibercone {

struct NumericalSemigroup {
  std::vector<std::uint64_t> generators;
};

/// n is a nonnegative integer combination of the generators (dynamic
/// programming over 0..n).
bool ns_contains(const NumericalSemigroup& semigroup, std::uint64_t n);

/// {s in S : s - a not in S}: the smallest element of S in each residue
/// class mod a. Exactly a elements when the generators are coprime.
struct AperyResult {
  std::uint64_t a = 0;
  std::vector<std::uint64_t> elements;  // ascending

  friend bool operator==(const AperyResult&, const AperyResult&) = default;
};

AperyResult apery_set(const NumericalSemigroup& semigroup, std::uint64_t a);

/// One row of the Cohen-Macaulay test: for nu in the first Apery set, the
/// minimal second coordinate mu with (nu, mu) in the plane semigroup, a
/// flag for membership of mu in the second Apery set, and the generator
/// multiset realizing (nu, mu).
struct CnPair {
  std::uint64_t nu = 0;
  std::uint64_t mu = 0;
  bool mu_in_b2 = false;
  std::vector<std::pair<std::array<std::uint64_t, 2>, std::uint64_t>> witness;
};

struct CnDiagnostics {
  std::vector<std::array<std::uint64_t, 2>> plane_generators;
  std::vector<std::uint64_t> b1;
  std::vector<std::uint64_t> b2;
  std::vector<CnPair> pairs;
};

/// Arithmetical Cohen-Macaulayness test for the plane semigroup spanned by
/// the mirror pairing of {0, n_1, ..., n_d} with its reverse: generator i
/// is (L_i, L_(d-i)). On inputs closed under t -> n_d - t (in particular
/// every equigenerated triple a < b < a+b) this is exactly the projective
/// monomial curve configuration (n_i, n_d - n_i); on other inputs it is the
/// symmetric-ideal configuration. Returns whether {0} plus the minimal
/// second coordinates over B1 reproduces B2.
std::pair<bool, CnDiagnostics> cn_is_cm(std::vector<std::uint64_t> ns);

}  // namespace fibercone
