#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibercone/expvec.hpp"
#include "fibercone/monomial_ideal.hpp"

namespace fibercone {

struct ProbeConfig {
  std::uint64_t degree_bound = 6;  // K
  std::uint32_t trials = 3;
  std::uint64_t prime = 1000003;
  std::uint64_t seed = 0x5eedf1be5;
  bool socle_shortcircuit = true;
};

enum class DepthKind { Depth0, CohenMacaulay, EvidenceDepthAtLeast, Unknown };

std::string to_string(DepthKind kind);

/// Per-trial record of the probe: ranks of the first generic form on each
/// graded piece, the dimensions of the quotient by it, ranks of the second
/// form on the quotient, and the resulting top-quotient dimensions.
struct ProbeTrial {
  std::vector<std::uint64_t> l1_coeffs;
  std::vector<std::uint64_t> l2_coeffs;
  std::vector<std::uint64_t> l1_ranks;   // rank of F_k -> F_(k+1), k = 0..K-1
  std::vector<std::uint64_t> w_dims;     // dim W_k, k = 0..K
  std::vector<std::uint64_t> l2_ranks;   // rank of W_k -> W_(k+1), k = 0..K-1
  std::vector<std::uint64_t> q_dims;     // dim W_k / l2 W_(k-1), k = 1..K
  int evidence = 0;
};

struct ProbeTranscript {
  std::uint64_t degree_bound = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::uint32_t trials = 0;
  std::vector<std::uint64_t> dims;  // mu(I^k), k = 0..K
  std::vector<ProbeTrial> runs;
};

/// Certificate-carrying depth result. Depth0 and CohenMacaulay are exact
/// and re-checkable; EvidenceDepthAtLeast is Monte Carlo evidence bounded
/// by the probe degree.
struct DepthVerdict {
  DepthKind kind = DepthKind::Unknown;
  std::string certificate;
  std::optional<std::pair<std::uint64_t, ExpVec>> socle;
  std::optional<std::uint64_t> monotone_k;
  int evidence_depth = 0;
  std::uint64_t bound = 0;
  std::optional<ProbeTranscript> transcript;
};

/// Smallest k <= kmax and lex-largest u in G(I^k) with u*u_j in m*I^(k+1)
/// for every generator u_j. A witness certifies depth F(I) = 0.
std::optional<std::pair<std::uint64_t, ExpVec>> socle_witness(const MonomialIdeal& ideal,
                                                              std::uint64_t kmax);

/// Smallest k <= kmax with mu(I^k) >= mu(I^(k+1)); certifies depth 0 for
/// non-principal ideals.
std::optional<std::uint64_t> monotonicity_certificate(const MonomialIdeal& ideal,
                                                      std::uint64_t kmax);

/// Random-linear-form probe over F_p: models F(I)_k on the basis G(I^k),
/// tests injectivity of a generic form degree by degree, then of a second
/// form on the quotient. Exact socle/monotonicity certificates short-circuit
/// unless disabled in the config.
DepthVerdict generic_linear_probe(const MonomialIdeal& ideal, const ProbeConfig& config);

/// Combined verdict: socle witness, monotonicity, theorem certificates
/// (concave/convex, classified symmetric 4-generated), then the probe.
DepthVerdict depth_verdict(const MonomialIdeal& ideal, const ProbeConfig& config);

}  // namespace fibercone
