#include "fibercone/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fibercone/errors.hpp"
#include "fibercone/semigroup.hpp"
#include "fibercone/shape.hpp"

namespace fibercone {

MonomialIdeal make_symmetric(const SymmetricSpec& spec) {
  const auto& a = spec.a_sequence;
  if (a.size() < 2) throw InvalidSpec("a symmetric ideal needs at least two exponents");
  if (a.back() != 0) throw InvalidSpec("the a-sequence must end in 0");
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] <= a[i + 1]) throw InvalidSpec("the a-sequence must be strictly decreasing");

  const std::size_t m = a.size();
  std::vector<ExpVec> gens;
  gens.reserve(m);
  for (std::size_t i = 0; i < m; ++i) gens.push_back({a[i], a[m - 1 - i]});
  MonomialIdeal ideal = make_ideal(std::move(gens));
  if (ideal.mu() != m)
    throw InternalInconsistency("symmetric generators collapsed under minimalization");
  return ideal;
}

bool is_symmetric(const MonomialIdeal& ideal) {
  const auto& g = ideal.gens();
  const std::size_t m = g.size();
  for (std::size_t i = 0; i < m; ++i)
    if (g[i].b != g[m - 1 - i].a) return false;
  return true;
}

MonomialIdeal tiny_squares_ideal(std::uint64_t m) {
  if (m < 5) throw InvalidSpec("the tiny-squares family starts at m = 5");
  SymmetricSpec spec;
  spec.a_sequence.push_back(5 * m);
  for (std::uint64_t v = 4 * m; v >= 3 * m + 4; --v) spec.a_sequence.push_back(v);
  spec.a_sequence.push_back(m);
  spec.a_sequence.push_back(0);
  if (spec.a_sequence.size() != m)
    throw InternalInconsistency("tiny-squares a-sequence has the wrong length");

  MonomialIdeal ideal = make_symmetric(spec);
  std::set<std::uint64_t> degrees;
  for (ExpVec g : ideal.gens()) degrees.insert(total_degree(g));
  if (degrees != std::set<std::uint64_t>{5 * m, 7 * m + 3})
    throw InternalInconsistency("tiny-squares ideal is not generated in degrees 5m and 7m+3");
  return ideal;
}

std::string to_string(SymVerdict verdict) {
  switch (verdict) {
    case SymVerdict::CM_Concave: return "cm-concave";
    case SymVerdict::CM_Convex: return "cm-convex";
    case SymVerdict::CM_SmallC: return "cm-small-c";
    case SymVerdict::CM_LargeC: return "cm-large-c";
    case SymVerdict::CM_Equigen: return "cm-equigenerated";
    case SymVerdict::NotCM_Equigen: return "not-cm-equigenerated";
    case SymVerdict::UnknownInterval: return "unknown-interval";
  }
  return "?";
}

namespace {

MonomialIdeal symmetric4_ideal(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return make_symmetric(SymmetricSpec{{c, b, a, 0}});
}

void verify_presentation_counts(const MonomialIdeal& ideal,
                                const std::vector<ZMonomial>& presentation) {
  const auto powers = power_table(ideal, 6);
  for (std::uint64_t k = 0; k <= 6; ++k) {
    const std::uint64_t expected = powers[k].mu();
    const std::uint64_t counted = standard_monomial_count(presentation, 4, k);
    if (counted != expected)
      throw InternalInconsistency("attached presentation has " + std::to_string(counted) +
                                  " standard monomials in degree " + std::to_string(k) +
                                  " but mu(I^k) = " + std::to_string(expected));
  }
}

}  // namespace

Symmetric4Report classify_symmetric4(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (!(0 < a && a < b && b < c)) throw InvalidSpec("need 0 < a < b < c");
  if (std::gcd(std::gcd(a, b), c) != 1) throw InvalidSpec("need gcd(a, b, c) = 1");

  Symmetric4Report report;
  report.a = a;
  report.b = b;
  report.c = c;
  report.r = (b + (b - a) - 1) / (b - a);  // ceil(b / (b - a))
  report.interval = {checked_add(checked_mul(2, a), 1),
                     checked_add(checked_mul(report.r, b - a), a)};

  const MonomialIdeal ideal = symmetric4_ideal(a, b, c);
  if (c == checked_add(a, b)) {
    report.verdict = (b == a + 1) ? SymVerdict::CM_Equigen : SymVerdict::NotCM_Equigen;
    const auto [cm, diag] = cn_is_cm({a, b, c});
    if (cm != (b == a + 1))
      throw InternalInconsistency("equigenerated criterion disagrees with the b = a+1 test");
    return report;
  }
  if (checked_mul(2, a) >= c) {
    report.verdict = SymVerdict::CM_SmallC;
    report.presentation = {zm_mul(zm_var(4, 2), zm_var(4, 3)), zm_var(4, 2, 2), zm_var(4, 3, 2)};
    verify_presentation_counts(ideal, report.presentation);
    return report;
  }
  if (c > report.interval.second) {
    report.verdict = SymVerdict::CM_LargeC;
    if (report.r - 1 > UINT32_MAX) throw Overflow("large-c presentation exponent exceeds 32 bits");
    const auto exp = static_cast<std::uint32_t>(report.r - 1);
    report.presentation = {zm_mul(zm_var(4, 1), zm_var(4, 3, exp)),
                           zm_mul(zm_var(4, 2, exp), zm_var(4, 4)),
                           zm_mul(zm_var(4, 1), zm_var(4, 4))};
    verify_presentation_counts(ideal, report.presentation);
    return report;
  }
  const bool concave = checked_mul(2, a) >= b && checked_mul(2, b) >= checked_add(a, c);
  const bool convex = checked_mul(2, a) <= b && checked_mul(2, b) <= checked_add(a, c);
  if (concave || convex) {
    report.verdict = concave ? SymVerdict::CM_Concave : SymVerdict::CM_Convex;
    const ShapeReport shape = classify_shape(ideal);
    if ((concave && !shape.is_concave) || (convex && !shape.is_convex))
      throw InternalInconsistency("inequality classification disagrees with the shape module");
    return report;
  }
  report.verdict = SymVerdict::UnknownInterval;
  return report;
}

Symmetric4Report shifted_family_check(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                      std::uint64_t shift) {
  if (!(0 < a && a < b && b < c)) throw InvalidSpec("need 0 < a < b < c");
  const std::uint64_t sa = checked_add(a, shift);
  const std::uint64_t sb = checked_add(b, shift);
  const std::uint64_t sc = checked_add(c, shift);
  const std::uint64_t g = std::gcd(std::gcd(sa, sb), sc);
  if (g != 1)
    throw InvalidSpec("shifted triple (" + std::to_string(sa) + ", " + std::to_string(sb) + ", " +
                      std::to_string(sc) + ") has gcd " + std::to_string(g) +
                      "; the classification applies to coprime triples only");
  Symmetric4Report report = classify_symmetric4(sa, sb, sc);
  const std::uint64_t doubled = checked_mul(2, a);
  const std::uint64_t threshold = c > doubled ? c - doubled : 0;
  if (shift >= threshold && report.verdict != SymVerdict::CM_SmallC)
    throw InternalInconsistency("shift past c - 2a did not land in the small-c region");
  return report;
}

bool verify_35b_generators(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t k) {
  const Symmetric4Report report = classify_symmetric4(a, b, c);
  if (report.verdict != SymVerdict::CM_LargeC)
    throw NotApplicable("the sliced generator description applies to large-c triples");
  if (k < 1 || k > 6) throw NotApplicable("k must lie in 1..6");

  const ExpVec u1{c, 0}, u2{b, a}, u3{a, b}, u4{0, c};
  const std::uint64_t r = report.r;

  // The pure-power factor forces the opposite slice below r - 1: these are
  // the standard monomials of z1*z3^(r-1) and its mirror.
  std::set<ExpVec> left, right;
  for (std::uint64_t k1 = 0; k1 <= k; ++k1) {
    for (std::uint64_t k2 = 0; k1 + k2 <= k; ++k2) {
      const std::uint64_t k3 = k - k1 - k2;
      const ExpVec prod = add(scaled(u1, k1), add(scaled(u2, k2), scaled(u3, k3)));
      if (k1 == 0 || k3 + 1 < r) left.insert(prod);
      const ExpVec mirror = add(scaled(u2, k2), add(scaled(u3, k3), scaled(u4, k1)));
      if (k1 == 0 || k2 + 1 < r) right.insert(mirror);
    }
  }

  auto gen_set = [](const MonomialIdeal& ideal) {
    return std::set<ExpVec>(ideal.gens().begin(), ideal.gens().end());
  };
  const auto oracle_left = gen_set(power(make_ideal({u1, u2, u3}), k));
  const auto oracle_right = gen_set(power(make_ideal({u2, u3, u4}), k));
  const auto oracle_full = gen_set(power(make_ideal({u1, u2, u3, u4}), k));
  const auto oracle_middle = gen_set(power(make_ideal({u2, u3}), k));

  if (left != oracle_left || right != oracle_right) return false;
  std::set<ExpVec> unioned = left;
  unioned.insert(right.begin(), right.end());
  if (unioned != oracle_full) return false;
  std::set<ExpVec> overlap;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::inserter(overlap, overlap.begin()));
  return overlap == oracle_middle;
}

}  // namespace fibercone
