#include "fibercone/shape.hpp"

#include <algorithm>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

using u128 = unsigned __int128;

bool componentwise_geq(ExpVec lhs, ExpVec rhs) { return lhs.a >= rhs.a && lhs.b >= rhs.b; }
bool componentwise_leq(ExpVec lhs, ExpVec rhs) { return lhs.a <= rhs.a && lhs.b <= rhs.b; }

void require_classified(const ShapeReport& report) {
  if (!report.is_concave && !report.is_convex)
    throw NotApplicable("ideal is neither concave nor convex");
}

}  // namespace

ShapeReport classify_shape(const MonomialIdeal& ideal) {
  if (ideal.mu() < 2) throw NotApplicable("shape classification needs at least two generators");
  if (!ideal.is_normalized())
    throw NotNormalized("shape classification expects a_m = b_1 = 0; normalize first");

  const auto& c = ideal.gens();
  const std::size_t m = c.size();

  ShapeReport report;
  report.is_concave = true;
  report.is_convex = true;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const ExpVec twice = scaled(c[i], 2);
    const ExpVec sum = add(c[i - 1], c[i + 1]);
    if (!componentwise_geq(twice, sum)) report.is_concave = false;
    if (!componentwise_leq(twice, sum)) report.is_convex = false;
  }

  report.corner_indices.push_back(1);
  if (report.is_concave != report.is_convex) {
    for (std::size_t i = 1; i + 1 < m; ++i) {
      const ExpVec twice = scaled(c[i], 2);
      const ExpVec sum = add(c[i - 1], c[i + 1]);
      const bool strict = report.is_concave ? (componentwise_geq(twice, sum) && twice != sum)
                                            : (componentwise_leq(twice, sum) && twice != sum);
      if (strict) report.corner_indices.push_back(i + 1);
    }
  }
  report.corner_indices.push_back(m);

  for (std::size_t t = 0; t + 1 < report.corner_indices.size(); ++t)
    report.segments.emplace_back(report.corner_indices[t], report.corner_indices[t + 1]);
  report.has_inner_corner =
      (report.is_concave || report.is_convex) && report.corner_indices.size() > 2;
  return report;
}

std::vector<std::size_t> segment_membership(const MonomialIdeal& ideal,
                                            const ShapeReport& report) {
  require_classified(report);
  const auto& c = ideal.gens();
  const auto& corners = report.corner_indices;
  std::vector<std::size_t> assignment(c.size(), 0);
  for (std::size_t j = 1; j <= c.size(); ++j) {
    const auto it = std::lower_bound(corners.begin(), corners.end(), j);
    std::size_t t = static_cast<std::size_t>(it - corners.begin());
    const std::size_t seg = (*it == j) ? (t == 0 ? 0 : t - 1) : t - 1;
    assignment[j - 1] = seg;

    // Collinearity with the segment endpoints; a failure here falsifies the
    // segment decomposition and is a bug.
    const ExpVec p = c[report.segments[seg].first - 1];
    const ExpVec q = c[report.segments[seg].second - 1];
    const std::uint64_t dx = p.a - q.a;
    const std::uint64_t dy = q.b - p.b;
    const u128 lhs = static_cast<u128>(p.a - c[j - 1].a) * dy;
    const u128 rhs = static_cast<u128>(c[j - 1].b - p.b) * dx;
    if (lhs != rhs)
      throw InternalInconsistency("generator " + std::to_string(j) +
                                  " is not collinear with its corner segment");
  }
  return assignment;
}

bool check_equidistance(const MonomialIdeal& ideal, const ShapeReport& report) {
  require_classified(report);
  const auto& c = ideal.gens();
  for (const auto& [lo, hi] : report.segments) {
    if (hi - lo < 2) continue;
    const ExpVec first = c[lo - 1];
    const ExpVec second = c[lo];
    const std::uint64_t da = first.a - second.a;
    const std::uint64_t db = second.b - first.b;
    for (std::size_t j = lo; j + 1 <= hi; ++j) {
      if (c[j - 1].a - c[j].a != da || c[j].b - c[j - 1].b != db) return false;
    }
  }
  return true;
}

}  // namespace fibercone
