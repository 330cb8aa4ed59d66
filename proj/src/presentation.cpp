#include "fibercone/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fibercone/errors.hpp"
#include "fibercone/shape.hpp"

namespace fibercone {

std::uint64_t ZMonomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps) d += e;
  return d;
}

ZMonomial zm_one(std::size_t num_vars) { return {std::vector<std::uint32_t>(num_vars, 0)}; }

ZMonomial zm_var(std::size_t num_vars, std::size_t i, std::uint32_t e) {
  if (i < 1 || i > num_vars) throw IndexError("variable index out of range");
  ZMonomial m = zm_one(num_vars);
  m.exps[i - 1] = e;
  return m;
}

ZMonomial zm_mul(const ZMonomial& lhs, const ZMonomial& rhs) {
  ZMonomial out = lhs;
  for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] += rhs.exps[i];
  return out;
}

bool zm_divides(const ZMonomial& div, const ZMonomial& target) {
  for (std::size_t i = 0; i < div.exps.size(); ++i)
    if (div.exps[i] > target.exps[i]) return false;
  return true;
}

ZMonomial zm_div(const ZMonomial& target, const ZMonomial& div) {
  ZMonomial out = target;
  for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] -= div.exps[i];
  return out;
}

ZMonomial zm_lcm(const ZMonomial& lhs, const ZMonomial& rhs) {
  ZMonomial out = lhs;
  for (std::size_t i = 0; i < out.exps.size(); ++i) out.exps[i] = std::max(out.exps[i], rhs.exps[i]);
  return out;
}

std::string zm_to_string(const ZMonomial& mono) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mono.exps.size(); ++i) {
    if (mono.exps[i] == 0) continue;
    if (!first) os << '*';
    os << 'z' << (i + 1);
    if (mono.exps[i] > 1) os << '^' << mono.exps[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

int zm_compare(const ZMonomial& lhs, const ZMonomial& rhs, TermOrder order) {
  if (lhs == rhs) return 0;
  if (order == TermOrder::Lex) {
    for (std::size_t i = 0; i < lhs.exps.size(); ++i) {
      if (lhs.exps[i] != rhs.exps[i]) return lhs.exps[i] > rhs.exps[i] ? 1 : -1;
    }
    return 0;
  }
  const std::uint64_t dl = lhs.degree();
  const std::uint64_t dr = rhs.degree();
  if (dl != dr) return dl > dr ? 1 : -1;
  for (std::size_t i = lhs.exps.size(); i-- > 0;) {
    if (lhs.exps[i] != rhs.exps[i]) return lhs.exps[i] < rhs.exps[i] ? 1 : -1;
  }
  return 0;
}

namespace {

ZBinomial oriented(ZMonomial first, ZMonomial second, TermOrder order) {
  if (zm_compare(first, second, order) > 0) return {std::move(first), std::move(second)};
  return {std::move(second), std::move(first)};
}

bool in_m_i2(const MonomialIdeal& square, const MonomialIdeal& ideal, std::size_t i,
             std::size_t j) {
  return in_max_ideal_times(square, add(ideal.gen(i), ideal.gen(j)));
}

}  // namespace

PresentationIdeal build_presentation(const MonomialIdeal& ideal) {
  const ShapeReport shape = classify_shape(ideal);
  if (!shape.is_concave && !shape.is_convex)
    throw NotApplicable("fiber-cone presentation needs a concave or convex ideal");
  const bool concave = shape.is_concave;
  const std::size_t m = ideal.mu();

  PresentationIdeal pres;
  pres.num_vars = m;
  pres.order = concave ? TermOrder::RevLex : TermOrder::Lex;

  for (const auto& [lo, hi] : shape.segments) {
    const std::size_t width = hi - lo;
    for (std::size_t r = 1; r < width; ++r) {
      for (std::size_t s = r + 1; s <= width; ++s) {
        const ZMonomial left = zm_mul(zm_var(m, lo + r - 1), zm_var(m, lo + s));
        const ZMonomial right = zm_mul(zm_var(m, lo + s - 1), zm_var(m, lo + r));
        pres.binomials.push_back(oriented(left, right, pres.order));
      }
    }
  }

  std::set<ZMonomial> initial_terms;
  for (const ZBinomial& b : pres.binomials) initial_terms.insert(b.lead);

  const MonomialIdeal square = power(ideal, 2);
  auto emit = [&](std::size_t i, std::size_t j) {
    const ZMonomial candidate = zm_mul(zm_var(m, i), zm_var(m, j));
    if (initial_terms.count(candidate)) return;
    if (!in_m_i2(square, ideal, i, j))
      throw InternalInconsistency("monomial relation " + zm_to_string(candidate) +
                                  " fails the membership test");
    pres.monomials.push_back(candidate);
  };
  if (concave) {
    for (std::size_t i = 2; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) emit(i, j);
  } else {
    for (std::size_t i = 1; i + 2 <= m; ++i)
      for (std::size_t j = i + 2; j <= m; ++j) emit(i, j);
  }
  return pres;
}

bool relation_membership_test(const MonomialIdeal& ideal, std::size_t i, std::size_t j) {
  if (i < 1 || j < i || j > ideal.mu()) throw IndexError("need 1 <= i <= j <= mu(I)");
  return member_of_m_times_power(ideal, 2, add(ideal.gen(i), ideal.gen(j)));
}

namespace {

// Monomial / +/- binomial arithmetic for the S-pair reduction. Signs are
// irrelevant for reducibility to zero, so a binomial is kept lead-first.
struct GbGenerator {
  ZMonomial lead;
  std::optional<ZMonomial> trail;
};

enum class PolyKind { Zero, Mono, Binom };

struct ZPoly {
  PolyKind kind = PolyKind::Zero;
  ZMonomial first;
  ZMonomial second;
};

bool reduces_to_zero(ZPoly poly, const std::vector<GbGenerator>& gens, TermOrder order) {
  while (poly.kind != PolyKind::Zero) {
    const GbGenerator* divisor = nullptr;
    for (const GbGenerator& g : gens) {
      if (zm_divides(g.lead, poly.first)) {
        divisor = &g;
        break;
      }
    }
    // An irreducible lead can never cancel later: every subsequent value is
    // strictly smaller in the term order.
    if (divisor == nullptr) return false;
    if (!divisor->trail) {
      if (poly.kind == PolyKind::Mono) {
        poly.kind = PolyKind::Zero;
      } else {
        poly.first = std::move(poly.second);
        poly.kind = PolyKind::Mono;
      }
      continue;
    }
    ZMonomial replacement = zm_mul(zm_div(poly.first, divisor->lead), *divisor->trail);
    if (poly.kind == PolyKind::Mono) {
      poly.first = std::move(replacement);
    } else if (replacement == poly.second) {
      poly.kind = PolyKind::Zero;
    } else if (zm_compare(replacement, poly.second, order) > 0) {
      poly.first = std::move(replacement);
    } else {
      poly.first = std::move(poly.second);
      poly.second = std::move(replacement);
    }
  }
  return true;
}

std::vector<GbGenerator> flatten(const PresentationIdeal& pres) {
  std::vector<GbGenerator> gens;
  gens.reserve(pres.binomials.size() + pres.monomials.size());
  for (const ZBinomial& b : pres.binomials) gens.push_back({b.lead, b.trail});
  for (const ZMonomial& mono : pres.monomials) gens.push_back({mono, std::nullopt});
  return gens;
}

}  // namespace

bool groebner_selfcheck(const PresentationIdeal& presentation) {
  const std::vector<GbGenerator> gens = flatten(presentation);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const GbGenerator& f = gens[i];
      const GbGenerator& g = gens[j];
      if (!f.trail && !g.trail) continue;
      const ZMonomial lcm = zm_lcm(f.lead, g.lead);
      ZPoly spoly;
      if (f.trail && g.trail) {
        ZMonomial p = zm_mul(zm_div(lcm, f.lead), *f.trail);
        ZMonomial q = zm_mul(zm_div(lcm, g.lead), *g.trail);
        if (p == q) continue;
        spoly.kind = PolyKind::Binom;
        if (zm_compare(p, q, presentation.order) > 0) {
          spoly.first = std::move(p);
          spoly.second = std::move(q);
        } else {
          spoly.first = std::move(q);
          spoly.second = std::move(p);
        }
      } else {
        const GbGenerator& binom = f.trail ? f : g;
        spoly.kind = PolyKind::Mono;
        spoly.first = zm_mul(zm_div(lcm, binom.lead), *binom.trail);
      }
      if (!reduces_to_zero(std::move(spoly), gens, presentation.order)) return false;
    }
  }
  return true;
}

std::vector<ZMonomial> initial_ideal(const PresentationIdeal& presentation) {
  std::set<ZMonomial> leads;
  for (const ZBinomial& b : presentation.binomials) leads.insert(b.lead);
  for (const ZMonomial& mono : presentation.monomials) leads.insert(mono);

  const std::size_t m = presentation.num_vars;
  std::set<ZMonomial> predicted;
  if (presentation.order == TermOrder::RevLex) {
    for (std::size_t i = 2; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) predicted.insert(zm_mul(zm_var(m, i), zm_var(m, j)));
  } else {
    for (std::size_t i = 1; i + 2 <= m; ++i)
      for (std::size_t j = i + 2; j <= m; ++j) predicted.insert(zm_mul(zm_var(m, i), zm_var(m, j)));
  }
  if (leads != predicted)
    throw InternalInconsistency("initial ideal does not match the predicted quadratic monomials");
  return {leads.begin(), leads.end()};
}

std::uint64_t standard_monomial_count(std::span<const ZMonomial> blockers, std::size_t num_vars,
                                      std::uint64_t degree) {
  ZMonomial current = zm_one(num_vars);
  std::uint64_t count = 0;
  auto visit = [&](auto&& self, std::size_t var, std::uint64_t remaining) -> void {
    if (var + 1 == num_vars) {
      current.exps[var] = static_cast<std::uint32_t>(remaining);
      bool blocked = false;
      for (const ZMonomial& b : blockers) {
        if (zm_divides(b, current)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) ++count;
      current.exps[var] = 0;
      return;
    }
    for (std::uint64_t e = 0; e <= remaining; ++e) {
      current.exps[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, remaining - e);
    }
    current.exps[var] = 0;
  };
  if (num_vars == 0) return degree == 0 ? 1 : 0;
  visit(visit, 0, degree);
  return count;
}

HilbertData hilbert_data(const MonomialIdeal& ideal, std::uint64_t degree_bound) {
  if (degree_bound < 3) throw BoundTooSmall("Hilbert data needs a degree bound of at least 3");
  HilbertData data;
  const auto powers = power_table(ideal, degree_bound);
  for (const MonomialIdeal& p : powers) data.mu.push_back(p.mu());

  // Numerator over (1-t)^2 = second differences of mu; fitted only when
  // they stabilize at zero at least two steps before the window ends.
  std::vector<std::int64_t> diffs(degree_bound + 1, 0);
  for (std::uint64_t k = 0; k <= degree_bound; ++k) {
    std::int64_t v = static_cast<std::int64_t>(data.mu[k]);
    if (k >= 1) v -= 2 * static_cast<std::int64_t>(data.mu[k - 1]);
    if (k >= 2) v += static_cast<std::int64_t>(data.mu[k - 2]);
    diffs[k] = v;
  }
  std::size_t last_nonzero = 0;  // diffs[0] = mu(I^0) = 1
  for (std::size_t k = 0; k < diffs.size(); ++k)
    if (diffs[k] != 0) last_nonzero = k;
  if (last_nonzero + 2 <= degree_bound)
    data.numerator = std::vector<std::int64_t>(diffs.begin(), diffs.begin() + last_nonzero + 1);
  return data;
}

std::string to_string(const PresentationIdeal& presentation) {
  std::ostringstream os;
  bool first = true;
  for (const ZBinomial& b : presentation.binomials) {
    if (!first) os << ", ";
    os << zm_to_string(b.lead) << " - " << zm_to_string(b.trail);
    first = false;
  }
  for (const ZMonomial& mono : presentation.monomials) {
    if (!first) os << ", ";
    os << zm_to_string(mono);
    first = false;
  }
  return os.str();
}

}  // namespace fibercone
