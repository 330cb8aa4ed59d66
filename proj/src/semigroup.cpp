#include "fibercone/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "fibercone/errors.hpp"
#include "fibercone/expvec.hpp"

namespace fibercone {

namespace {

constexpr std::uint64_t kInfinite = std::numeric_limits<std::uint64_t>::max();

void validate_generators(const std::vector<std::uint64_t>& gens) {
  if (gens.empty()) throw InvalidSpec("numerical semigroup needs at least one generator");
  for (auto g : gens)
    if (g == 0) throw InvalidSpec("numerical semigroup generators must be positive");
}

std::uint64_t gcd_all(const std::vector<std::uint64_t>& values) {
  std::uint64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

/// Smallest element of <gens> in each residue class mod a (shortest paths
/// on the residue graph with step weights equal to the generators).
std::vector<std::uint64_t> smallest_per_residue(const std::vector<std::uint64_t>& gens,
                                                std::uint64_t a) {
  std::vector<std::uint64_t> dist(a, kInfinite);
  dist[0] = 0;
  using Node = std::pair<std::uint64_t, std::uint64_t>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> queue;
  queue.push({0, 0});
  while (!queue.empty()) {
    const auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[residue]) continue;
    for (auto g : gens) {
      const std::uint64_t next = checked_add(value, g);
      const std::uint64_t r = next % a;
      if (next < dist[r]) {
        dist[r] = next;
        queue.push({next, r});
      }
    }
  }
  return dist;
}

}  // namespace

bool ns_contains(const NumericalSemigroup& semigroup, std::uint64_t n) {
  validate_generators(semigroup.generators);
  if (n == 0) return true;
  std::vector<char> reachable(n + 1, 0);
  reachable[0] = 1;
  for (std::uint64_t v = 1; v <= n; ++v) {
    for (auto g : semigroup.generators) {
      if (g <= v && reachable[v - g]) {
        reachable[v] = 1;
        break;
      }
    }
  }
  return reachable[n] != 0;
}

AperyResult apery_set(const NumericalSemigroup& semigroup, std::uint64_t a) {
  validate_generators(semigroup.generators);
  if (a == 0) throw InvalidSpec("Apery sets are taken with respect to a positive element");
  if (!ns_contains(semigroup, a)) throw NotInSemigroup(std::to_string(a) + " is not in the semigroup");
  if (gcd_all(semigroup.generators) != 1)
    throw InfiniteApery("Apery sets are finite only for coprime generators");

  AperyResult result;
  result.a = a;
  result.elements = smallest_per_residue(semigroup.generators, a);
  for (auto v : result.elements) {
    if (v == kInfinite) throw InternalInconsistency("unreachable residue class in an Apery set");
  }
  std::sort(result.elements.begin(), result.elements.end());
  return result;
}

std::pair<bool, CnDiagnostics> cn_is_cm(std::vector<std::uint64_t> ns) {
  validate_generators(ns);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (gcd_all(ns) != 1) throw InfiniteApery("the test needs coprime generators");

  const std::size_t d = ns.size();
  const std::uint64_t top = ns.back();
  std::vector<std::uint64_t> padded;
  padded.push_back(0);
  padded.insert(padded.end(), ns.begin(), ns.end());

  CnDiagnostics diag;
  for (std::size_t i = 0; i <= d; ++i)
    diag.plane_generators.push_back({padded[i], padded[d - i]});

  const NumericalSemigroup s1{ns};
  diag.b1 = apery_set(s1, top).elements;
  std::vector<std::uint64_t> second_coords;
  for (const auto& g : diag.plane_generators)
    if (g[1] != 0) second_coords.push_back(g[1]);
  const NumericalSemigroup s2{second_coords};
  diag.b2 = apery_set(s2, top).elements;

  // Minimal second coordinate per nu: min-cost unbounded knapsack where a
  // plane generator (f, s) advances the first coordinate by f at cost s.
  // The (0, top) generator never lowers a cost and is skipped.
  std::vector<std::array<std::uint64_t, 2>> items;
  for (const auto& g : diag.plane_generators)
    if (g[0] != 0) items.push_back(g);

  std::vector<std::uint64_t> mus;
  mus.push_back(0);
  for (auto nu : diag.b1) {
    if (nu == 0) continue;
    std::vector<std::uint64_t> cost(nu + 1, kInfinite);
    std::vector<std::size_t> choice(nu + 1, items.size());
    cost[0] = 0;
    for (std::uint64_t v = 1; v <= nu; ++v) {
      for (std::size_t t = 0; t < items.size(); ++t) {
        const auto& item = items[t];
        if (item[0] <= v && cost[v - item[0]] != kInfinite) {
          const std::uint64_t c = checked_add(cost[v - item[0]], item[1]);
          if (c < cost[v]) {
            cost[v] = c;
            choice[v] = t;
          }
        }
      }
    }
    if (cost[nu] == kInfinite)
      throw InternalInconsistency("Apery element " + std::to_string(nu) +
                                  " is not reachable in the plane semigroup");
    CnPair pair;
    pair.nu = nu;
    pair.mu = cost[nu];
    pair.mu_in_b2 = std::binary_search(diag.b2.begin(), diag.b2.end(), pair.mu);
    std::vector<std::uint64_t> counts(items.size(), 0);
    for (std::uint64_t v = nu; v > 0; v -= items[choice[v]][0]) ++counts[choice[v]];
    for (std::size_t t = 0; t < items.size(); ++t)
      if (counts[t] > 0) pair.witness.emplace_back(items[t], counts[t]);
    mus.push_back(pair.mu);
    diag.pairs.push_back(std::move(pair));
  }

  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
  const bool cohen_macaulay = (mus == diag.b2);
  return {cohen_macaulay, std::move(diag)};
}

}  // namespace fibercone
