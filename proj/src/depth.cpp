#include "fibercone/depth.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fibercone/errors.hpp"
#include "fibercone/fp_linalg.hpp"
#include "fibercone/parse.hpp"
#include "fibercone/shape.hpp"
#include "fibercone/symmetric.hpp"

namespace fibercone {

std::string to_string(DepthKind kind) {
  switch (kind) {
    case DepthKind::Depth0: return "depth-0";
    case DepthKind::CohenMacaulay: return "cohen-macaulay";
    case DepthKind::EvidenceDepthAtLeast: return "evidence-depth-at-least";
    case DepthKind::Unknown: return "unknown";
  }
  return "?";
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                             31ULL, 37ULL}) {
    std::uint64_t x = fp::powmod(base % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = fp::mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

/// Structural multiplication data: for every degree k and generator u_j,
/// which basis monomials of F_k map to which basis monomials of F_(k+1)
/// (products landing in m*I^(k+1) map to zero).
struct MultiplicationTables {
  struct Entry {
    std::uint32_t col;
    std::uint32_t var;
    std::uint32_t row;
  };
  std::vector<std::uint64_t> dims;                // mu(I^k), k = 0..K
  std::vector<std::vector<Entry>> entries;        // k = 0..K-1
};

MultiplicationTables build_tables(const MonomialIdeal& ideal, std::uint64_t degree_bound) {
  MultiplicationTables tables;
  const auto powers = power_table(ideal, degree_bound);
  for (const auto& p : powers) tables.dims.push_back(p.mu());
  const auto& gens = ideal.gens();
  for (std::uint64_t k = 0; k < degree_bound; ++k) {
    const auto& from = powers[k].gens();
    const auto& to = powers[k + 1].gens();
    std::vector<MultiplicationTables::Entry> entries;
    for (std::size_t c = 0; c < from.size(); ++c) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const ExpVec product = add(from[c], gens[j]);
        const auto it = std::lower_bound(to.begin(), to.end(), product, std::greater<ExpVec>{});
        if (it != to.end() && *it == product) {
          entries.push_back({static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(j),
                             static_cast<std::uint32_t>(it - to.begin())});
        }
      }
    }
    tables.entries.push_back(std::move(entries));
  }
  return tables;
}

fp::Matrix assemble(const MultiplicationTables& tables, std::uint64_t k,
                    const std::vector<std::uint64_t>& coeffs, std::uint64_t p) {
  fp::Matrix m(tables.dims[k + 1], tables.dims[k]);
  for (const auto& e : tables.entries[k]) {
    m.at(e.row, e.col) = (m.at(e.row, e.col) + coeffs[e.var]) % p;
  }
  return m;
}

}  // namespace

std::optional<std::pair<std::uint64_t, ExpVec>> socle_witness(const MonomialIdeal& ideal,
                                                              std::uint64_t kmax) {
  if (ideal.mu() < 2) throw NotApplicable("socle search needs a non-principal ideal");
  if (!ideal.is_normalized()) throw NotNormalized("socle search expects a normalized ideal");
  const auto powers = power_table(ideal, kmax + 1);
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    for (ExpVec u : powers[k].gens()) {
      bool socle = true;
      for (ExpVec g : ideal.gens()) {
        if (!in_max_ideal_times(powers[k + 1], add(u, g))) {
          socle = false;
          break;
        }
      }
      if (socle) return std::make_pair(k, u);
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> monotonicity_certificate(const MonomialIdeal& ideal,
                                                      std::uint64_t kmax) {
  if (ideal.mu() < 2) throw NotApplicable("monotonicity certificate needs a non-principal ideal");
  const auto powers = power_table(ideal, kmax + 1);
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    if (powers[k].mu() >= powers[k + 1].mu()) return k;
  }
  return std::nullopt;
}

DepthVerdict generic_linear_probe(const MonomialIdeal& ideal, const ProbeConfig& config) {
  if (!is_prime(config.prime)) throw InvalidPrime("probe field size must be prime");
  if (config.degree_bound < 3) throw NotApplicable("probe degree bound must be at least 3");
  if (ideal.mu() < 2) throw NotApplicable("depth probe needs a non-principal ideal");

  const auto [normalized, factor] = normalize(ideal);
  const std::uint64_t K = config.degree_bound;

  DepthVerdict verdict;
  verdict.bound = K;
  if (config.socle_shortcircuit) {
    if (auto socle = socle_witness(normalized, K)) {
      verdict.kind = DepthKind::Depth0;
      verdict.socle = socle;
      verdict.certificate = "socle witness " + format_monomial(socle->second) + " in degree " +
                            std::to_string(socle->first);
      return verdict;
    }
    if (auto k = monotonicity_certificate(normalized, K)) {
      verdict.kind = DepthKind::Depth0;
      verdict.monotone_k = k;
      verdict.certificate =
          "mu(I^" + std::to_string(*k) + ") >= mu(I^" + std::to_string(*k + 1) + ")";
      return verdict;
    }
  }

  const MultiplicationTables tables = build_tables(normalized, K);
  const std::size_t m = normalized.mu();
  const std::uint64_t p = config.prime;

  ProbeTranscript transcript;
  transcript.degree_bound = K;
  transcript.prime = p;
  transcript.seed = config.seed;
  transcript.trials = config.trials;
  transcript.dims = tables.dims;

  int best = 0;
  for (std::uint32_t t = 0; t < config.trials; ++t) {
    SplitMix64 rng{config.seed + 0x1000 * static_cast<std::uint64_t>(t)};
    ProbeTrial trial;
    for (std::size_t j = 0; j < m; ++j) trial.l1_coeffs.push_back(rng.next() % p);
    for (std::size_t j = 0; j < m; ++j) trial.l2_coeffs.push_back(rng.next() % p);

    std::vector<fp::Matrix> l1(K);
    for (std::uint64_t k = 0; k < K; ++k) l1[k] = assemble(tables, k, trial.l1_coeffs, p);
    bool injective = true;
    for (std::uint64_t k = 0; k < K; ++k) {
      const std::uint64_t r = fp::rank(l1[k], p);
      trial.l1_ranks.push_back(r);
      if (k >= 1 && r != tables.dims[k]) injective = false;
    }

    if (injective) {
      trial.evidence = 1;
      // W_k = F_k / l1*F_(k-1); the induced action of l2 is well defined
      // because the two forms commute.
      std::vector<fp::Cokernel> w(K + 1);
      w[0].ambient = tables.dims[0];
      for (std::size_t c = 0; c < w[0].ambient; ++c) w[0].free_coords.push_back(c);
      for (std::uint64_t k = 1; k <= K; ++k) w[k] = fp::cokernel_of_columns(l1[k - 1], p);
      for (std::uint64_t k = 0; k <= K; ++k) trial.w_dims.push_back(w[k].dim());

      bool induced_injective = true;
      for (std::uint64_t k = 0; k < K; ++k) {
        const fp::Matrix l2 = assemble(tables, k, trial.l2_coeffs, p);
        fp::Matrix induced(w[k + 1].dim(), w[k].dim());
        for (std::size_t c = 0; c < w[k].dim(); ++c) {
          std::vector<std::uint64_t> image(tables.dims[k + 1], 0);
          const std::size_t source = w[k].free_coords[c];
          for (std::size_t r = 0; r < tables.dims[k + 1]; ++r) image[r] = l2.at(r, source);
          const auto projected = w[k + 1].project(std::move(image), p);
          for (std::size_t r = 0; r < projected.size(); ++r) induced.at(r, c) = projected[r];
        }
        const std::uint64_t r = fp::rank(induced, p);
        trial.l2_ranks.push_back(r);
        trial.q_dims.push_back(w[k + 1].dim() - r);
        if (k + 1 < K && r != w[k].dim()) induced_injective = false;
      }
      const bool eventually_zero =
          trial.q_dims.size() >= 2 && trial.q_dims[K - 2] == 0 && trial.q_dims[K - 1] == 0;
      if (induced_injective && eventually_zero) trial.evidence = 2;
    }
    best = std::max(best, trial.evidence);
    transcript.runs.push_back(std::move(trial));
  }

  verdict.transcript = std::move(transcript);
  if (best >= 1) {
    verdict.kind = DepthKind::EvidenceDepthAtLeast;
    verdict.evidence_depth = best;
    verdict.certificate = "generic linear forms act injectively up to degree " + std::to_string(K) +
                          " (probabilistic, " + std::to_string(config.trials) + " trials mod " +
                          std::to_string(p) + ")";
  } else {
    verdict.kind = DepthKind::Unknown;
    verdict.certificate = "no exact certificate and no probe evidence up to degree " +
                          std::to_string(K);
  }
  return verdict;
}

DepthVerdict depth_verdict(const MonomialIdeal& ideal, const ProbeConfig& config) {
  const auto [normalized, factor] = normalize(ideal);
  const std::uint64_t K = config.degree_bound;

  DepthVerdict verdict;
  verdict.bound = K;
  if (normalized.mu() == 1) {
    verdict.kind = DepthKind::CohenMacaulay;
    verdict.certificate = "principal ideal: the fiber cone is a polynomial ring";
    return verdict;
  }

  if (auto socle = socle_witness(normalized, K)) {
    verdict.kind = DepthKind::Depth0;
    // Report the witness in the coordinates of the input ideal.
    const ExpVec original = add(socle->second, scaled(factor, socle->first));
    verdict.socle = std::make_pair(socle->first, original);
    verdict.certificate = "socle witness " + format_monomial(original) + " in degree " +
                          std::to_string(socle->first);
    return verdict;
  }
  if (auto k = monotonicity_certificate(normalized, K)) {
    verdict.kind = DepthKind::Depth0;
    verdict.monotone_k = k;
    verdict.certificate =
        "mu(I^" + std::to_string(*k) + ") >= mu(I^" + std::to_string(*k + 1) + ")";
    return verdict;
  }

  const ShapeReport shape = classify_shape(normalized);
  if (shape.is_concave) {
    verdict.kind = DepthKind::CohenMacaulay;
    verdict.certificate = "concave ideal: quadratic Groebner presentation of the fiber cone";
    return verdict;
  }
  if (shape.is_convex) {
    verdict.kind = DepthKind::CohenMacaulay;
    verdict.certificate = "convex ideal: radical quadratic presentation of the fiber cone";
    return verdict;
  }

  if (normalized.mu() == 4 && is_symmetric(normalized)) {
    const std::uint64_t a = normalized.gen(3).a;
    const std::uint64_t b = normalized.gen(2).a;
    const std::uint64_t c = normalized.gen(1).a;
    const std::uint64_t g = std::gcd(std::gcd(a, b), c);
    // Rescaling exponents by 1/g is a graded isomorphism of fiber cones.
    const Symmetric4Report report = classify_symmetric4(a / g, b / g, c / g);
    const std::string scaled_note =
        g > 1 ? " (after rescaling exponents by " + std::to_string(g) + ")" : "";
    switch (report.verdict) {
      case SymVerdict::CM_Equigen:
        verdict.kind = DepthKind::CohenMacaulay;
        verdict.certificate =
            "equigenerated symmetric with consecutive middle exponents" + scaled_note;
        return verdict;
      case SymVerdict::NotCM_Equigen:
        verdict.kind = DepthKind::EvidenceDepthAtLeast;
        verdict.evidence_depth = 1;
        verdict.certificate =
            "equigenerated symmetric, not Cohen-Macaulay; the fiber cone is a domain, so the "
            "depth is exactly 1" +
            scaled_note;
        return verdict;
      case SymVerdict::CM_SmallC:
        verdict.kind = DepthKind::CohenMacaulay;
        verdict.certificate = "symmetric small-c presentation (z2*z3, z2^2, z3^2)" + scaled_note;
        return verdict;
      case SymVerdict::CM_LargeC:
        verdict.kind = DepthKind::CohenMacaulay;
        verdict.certificate = "symmetric large-c determinantal presentation" + scaled_note;
        return verdict;
      case SymVerdict::CM_Concave:
      case SymVerdict::CM_Convex:
      case SymVerdict::UnknownInterval:
        break;  // concave/convex were already handled; fall through to the probe
    }
  }

  ProbeConfig probe_config = config;
  probe_config.socle_shortcircuit = false;  // the exact certificates already ran
  return generic_linear_probe(normalized, probe_config);
}

}  // namespace fibercone
