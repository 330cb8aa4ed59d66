#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fibercone/expvec.hpp"

namespace fibercone {

/// Monomial ideal in K[x, y], stored as its unique minimal generating set.
/// Generators are sorted lex-descending, so the exponent sequences satisfy
/// a_1 > a_2 > ... > a_m and b_1 < b_2 < ... < b_m.
class MonomialIdeal {
 public:
  const std::vector<ExpVec>& gens() const { return gens_; }

  /// Number of minimal generators.
  std::size_t mu() const { return gens_.size(); }

  /// 1-based access matching the u_1 > ... > u_m labeling.
  ExpVec gen(std::size_t i) const;

  /// a_m == 0 and b_1 == 0 (height-two position).
  bool is_normalized() const { return gens_.back().a == 0 && gens_.front().b == 0; }

  /// Ideal membership: some generator divides u.
  bool contains(ExpVec u) const;

  bool is_unit() const { return gens_.size() == 1 && gens_[0] == ExpVec{0, 0}; }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  explicit MonomialIdeal(std::vector<ExpVec> minimal_sorted) : gens_(std::move(minimal_sorted)) {}
  friend MonomialIdeal make_ideal(std::vector<ExpVec> raw);

  std::vector<ExpVec> gens_;
};

/// Minimalize and sort; the result is independent of the input order.
MonomialIdeal make_ideal(std::vector<ExpVec> raw);

MonomialIdeal unit_ideal();

/// Divide out the componentwise minimum g of the generators. Returns
/// (I', g) with I' in height-two position and mu(I') = mu(I).
std::pair<MonomialIdeal, ExpVec> normalize(const MonomialIdeal& ideal);

MonomialIdeal multiply(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// I^k via repeated multiplication; I^0 is the unit ideal. This is the
/// brute-force oracle every closed-form generator claim is checked against.
MonomialIdeal power(const MonomialIdeal& ideal, std::uint64_t k);

/// I^0, I^1, ..., I^K.
std::vector<MonomialIdeal> power_table(const MonomialIdeal& ideal, std::uint64_t degree_bound);

/// u lies in m*J where J is a precomputed power of an ideal: some
/// generator of J strictly divides u.
bool in_max_ideal_times(const MonomialIdeal& power_ideal, ExpVec u);

/// u in m*I^k, k >= 1.
bool member_of_m_times_power(const MonomialIdeal& ideal, std::uint64_t k, ExpVec u);

/// Every generator of inner lies in outer.
bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer);

}  // namespace fibercone
