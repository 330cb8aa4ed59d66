#include "fibercone/powers.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

std::vector<ExpVec> sorted_descending(std::set<ExpVec> gens) {
  std::vector<ExpVec> out(gens.begin(), gens.end());
  std::reverse(out.begin(), out.end());
  return out;
}

void check_count(std::size_t actual, std::size_t m, std::uint64_t k) {
  const std::size_t expected = static_cast<std::size_t>((m - 1) * k + 1);
  if (actual != expected)
    throw InternalInconsistency("closed-form power generators: got " + std::to_string(actual) +
                                " elements, expected (m-1)k+1 = " + std::to_string(expected));
}

}  // namespace

std::vector<ExpVec> concave_power_gens(const MonomialIdeal& ideal, std::uint64_t k) {
  if (k < 1) throw NotApplicable("power exponent must be positive");
  const ShapeReport shape = classify_shape(ideal);
  if (!shape.is_concave) throw NotApplicable("closed-form concave generators need a concave ideal");

  const auto& u = ideal.gens();
  const std::size_t m = u.size();
  std::set<ExpVec> gens;
  const ExpVec top = scaled(u.front(), k - 1);
  for (std::size_t j = 0; j < m; ++j) gens.insert(add(top, u[j]));
  for (std::uint64_t i = 2; i <= k; ++i) {
    const ExpVec base = add(scaled(u.front(), k - i), scaled(u.back(), i - 1));
    for (std::size_t j = 1; j < m; ++j) gens.insert(add(base, u[j]));
  }
  check_count(gens.size(), m, k);
  return sorted_descending(std::move(gens));
}

std::vector<ExpVec> convex_power_gens(const MonomialIdeal& ideal, std::uint64_t k) {
  if (k < 1) throw NotApplicable("power exponent must be positive");
  const ShapeReport shape = classify_shape(ideal);
  if (!shape.is_convex) throw NotApplicable("closed-form convex generators need a convex ideal");

  const auto& u = ideal.gens();
  const std::size_t m = u.size();
  std::set<ExpVec> gens;
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::uint64_t l = 0; l <= k; ++l) gens.insert(add(scaled(u[i], l), scaled(u[i + 1], k - l)));
  check_count(gens.size(), m, k);
  return sorted_descending(std::move(gens));
}

MonomialIdeal pure_power_reduction(const MonomialIdeal& ideal) {
  return make_ideal({ideal.gens().front(), ideal.gens().back()});
}

std::uint64_t default_reduction_bound(const MonomialIdeal& ideal) {
  return std::max<std::uint64_t>(8, ideal.gens().front().a);
}

ReductionResult reduction_number(const MonomialIdeal& ideal, const MonomialIdeal& reduction,
                                 std::uint64_t bound) {
  if (bound < 1) throw NotApplicable("reduction search bound must be positive");
  if (!is_subideal(reduction, ideal)) throw NotASubideal("candidate reduction is not contained in the ideal");

  ReductionResult result{reduction, std::nullopt, bound, std::nullopt};
  const auto powers = power_table(ideal, bound + 1);
  for (std::uint64_t r = 0; r <= bound; ++r) {
    if (powers[r + 1] == multiply(reduction, powers[r])) {
      result.reduction_number = r;
      return result;
    }
  }
  const MonomialIdeal obstruction = multiply(reduction, powers[bound]);
  for (ExpVec g : powers[bound + 1].gens()) {
    if (!obstruction.contains(g)) {
      result.witness = {bound + 1, g};
      break;
    }
  }
  if (!result.witness)
    throw InternalInconsistency("reduction search failed at every step but no witness exists");
  return result;
}

std::optional<PurePower> detect_pure_power(const MonomialIdeal& ideal) {
  const ShapeReport shape = classify_shape(ideal);
  if (!shape.is_concave && !shape.is_convex)
    throw NotApplicable("pure-power detection needs a concave or convex ideal");
  if (shape.has_inner_corner) return std::nullopt;

  const std::uint64_t k = ideal.mu() - 1;
  const std::uint64_t a1 = ideal.gens().front().a;
  const std::uint64_t bm = ideal.gens().back().b;
  if (a1 % k != 0 || bm % k != 0)
    throw InternalInconsistency("corner-free ideal with non-equidistant endpoints");
  const PurePower result{a1 / k, bm / k, k};
  const MonomialIdeal rebuilt =
      power(make_ideal({ExpVec{result.a, 0}, ExpVec{0, result.b}}), k);
  if (!(rebuilt == ideal))
    throw InternalInconsistency("pure-power reconstruction does not reproduce the ideal");
  return result;
}

std::vector<std::pair<std::uint64_t, ShapeReport>> power_shape_report(const MonomialIdeal& ideal,
                                                                      std::uint64_t kmax) {
  if (kmax < 1) throw NotApplicable("kmax must be positive");
  const ShapeReport base = classify_shape(ideal);
  std::vector<std::pair<std::uint64_t, ShapeReport>> out;
  const auto powers = power_table(ideal, kmax);
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    ShapeReport rep = classify_shape(powers[k]);
    if (base.is_convex && !rep.is_convex)
      throw InternalInconsistency("power " + std::to_string(k) + " of a convex ideal is not convex");
    if (base.is_concave && base.has_inner_corner && k >= 2 && rep.is_concave)
      throw InternalInconsistency("power " + std::to_string(k) +
                                  " of a concave ideal with an inner corner came out concave");
    if (base.is_concave && !base.has_inner_corner && !rep.is_concave)
      throw InternalInconsistency("power " + std::to_string(k) +
                                  " of a corner-free concave ideal is not concave");
    out.emplace_back(k, std::move(rep));
  }
  return out;
}

}  // namespace fibercone
