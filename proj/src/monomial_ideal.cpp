#include "fibercone/monomial_ideal.hpp"

#include <algorithm>

#include "fibercone/errors.hpp"

namespace fibercone {

ExpVec MonomialIdeal::gen(std::size_t i) const {
  if (i < 1 || i > gens_.size()) throw IndexError("generator index out of range");
  return gens_[i - 1];
}

bool MonomialIdeal::contains(ExpVec u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](ExpVec g) { return divides(g, u); });
}

MonomialIdeal make_ideal(std::vector<ExpVec> raw) {
  if (raw.empty()) throw InvalidIdeal("a monomial ideal needs at least one generator");
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // Staircase sweep: with a ascending, a monomial is minimal iff its b is
  // strictly below everything seen so far.
  std::vector<ExpVec> kept;
  std::uint64_t min_b = UINT64_MAX;
  for (const ExpVec& g : raw) {
    if (g.b < min_b) {
      kept.push_back(g);
      min_b = g.b;
    }
  }
  std::reverse(kept.begin(), kept.end());
  return MonomialIdeal(std::move(kept));
}

MonomialIdeal unit_ideal() { return make_ideal({ExpVec{0, 0}}); }

std::pair<MonomialIdeal, ExpVec> normalize(const MonomialIdeal& ideal) {
  const auto& gens = ideal.gens();
  const ExpVec factor{gens.back().a, gens.front().b};
  std::vector<ExpVec> shifted;
  shifted.reserve(gens.size());
  for (ExpVec g : gens) shifted.push_back(quotient(g, factor));
  return {make_ideal(std::move(shifted)), factor};
}

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  std::vector<ExpVec> products;
  products.reserve(lhs.mu() * rhs.mu());
  for (ExpVec u : lhs.gens())
    for (ExpVec v : rhs.gens()) products.push_back(add(u, v));
  return make_ideal(std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::uint64_t k) {
  MonomialIdeal acc = unit_ideal();
  for (std::uint64_t i = 0; i < k; ++i) acc = multiply(acc, ideal);
  return acc;
}

std::vector<MonomialIdeal> power_table(const MonomialIdeal& ideal, std::uint64_t degree_bound) {
  std::vector<MonomialIdeal> table;
  table.reserve(degree_bound + 1);
  table.push_back(unit_ideal());
  for (std::uint64_t k = 1; k <= degree_bound; ++k) table.push_back(multiply(table.back(), ideal));
  return table;
}

bool in_max_ideal_times(const MonomialIdeal& power_ideal, ExpVec u) {
  const auto& gens = power_ideal.gens();
  return std::any_of(gens.begin(), gens.end(), [&](ExpVec g) { return strictly_divides(g, u); });
}

bool member_of_m_times_power(const MonomialIdeal& ideal, std::uint64_t k, ExpVec u) {
  if (k < 1) throw NotApplicable("membership in m*I^k needs k >= 1");
  return in_max_ideal_times(power(ideal, k), u);
}

bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  return std::all_of(inner.gens().begin(), inner.gens().end(),
                     [&](ExpVec g) { return outer.contains(g); });
}

}  // namespace fibercone
