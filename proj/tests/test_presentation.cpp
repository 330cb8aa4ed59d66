#include <doctest.h>

#include <set>

#include "fibercone/errors.hpp"
#include "fibercone/fp_linalg.hpp"
#include "fibercone/presentation.hpp"
#include "fibercone/shape.hpp"
#include "support/fixtures.hpp"
#include "support/random_ideals.hpp"

using namespace fibercone;
using namespace fibercone::testsupport;

namespace {

// The degree-2 graded piece of the defining ideal is exactly the kernel of
// z_i z_j -> class of u_i u_j in I^2 / m I^2. The generators are checked to
// be independent elements of that kernel with the right total count.
void check_degree2_kernel(const MonomialIdeal& ideal, const PresentationIdeal& pres) {
  const std::size_t m = ideal.mu();
  const MonomialIdeal square = power(ideal, 2);
  const std::size_t pairs = m * (m + 1) / 2;
  const std::size_t kernel_dim = pairs - square.mu();
  CHECK(pres.binomials.size() + pres.monomials.size() == kernel_dim);

  auto pair_index = [&](std::size_t i, std::size_t j) {
    // 1 <= i <= j <= m mapped to a flat index.
    const std::size_t zero_based_i = i - 1;
    return zero_based_i * m - zero_based_i * (zero_based_i - 1) / 2 + (j - i);
  };
  auto monomial_pair = [&](const ZMonomial& mono) {
    std::vector<std::size_t> vars;
    for (std::size_t v = 0; v < mono.exps.size(); ++v)
      for (std::uint32_t e = 0; e < mono.exps[v]; ++e) vars.push_back(v + 1);
    REQUIRE(vars.size() == 2);
    return pair_index(vars[0], vars[1]);
  };

  const std::uint64_t p = 1000003;
  fp::Matrix gens_matrix(pres.binomials.size() + pres.monomials.size(), pairs);
  std::size_t row = 0;
  for (const ZBinomial& b : pres.binomials) {
    gens_matrix.at(row, monomial_pair(b.lead)) = 1;
    gens_matrix.at(row, monomial_pair(b.trail)) = p - 1;
    ++row;
    // Soundness: the two monomials have equal exponent sums.
    std::vector<std::size_t> lead_vars, trail_vars;
    ExpVec lead_sum{0, 0}, trail_sum{0, 0};
    for (std::size_t v = 0; v < b.lead.exps.size(); ++v) {
      for (std::uint32_t e = 0; e < b.lead.exps[v]; ++e) lead_sum = add(lead_sum, ideal.gen(v + 1));
      for (std::uint32_t e = 0; e < b.trail.exps[v]; ++e)
        trail_sum = add(trail_sum, ideal.gen(v + 1));
    }
    CHECK(lead_sum == trail_sum);
  }
  for (const ZMonomial& mono : pres.monomials) {
    gens_matrix.at(row, monomial_pair(mono)) = 1;
    ++row;
    // Soundness: u_i u_j falls into m I^2.
    ExpVec sum{0, 0};
    for (std::size_t v = 0; v < mono.exps.size(); ++v)
      for (std::uint32_t e = 0; e < mono.exps[v]; ++e) sum = add(sum, ideal.gen(v + 1));
    CHECK(in_max_ideal_times(square, sum));
  }
  CHECK(fp::rank(gens_matrix, p) == kernel_dim);
}

}  // namespace

TEST_CASE("presentation of the nine-generator concave fixture") {
  const MonomialIdeal big = concave_m9();
  const PresentationIdeal pres = build_presentation(big);
  CHECK(pres.order == TermOrder::RevLex);
  CHECK(pres.binomials.size() == 8);
  CHECK(pres.monomials.size() == 20);
  CHECK(groebner_selfcheck(pres));

  const auto initial = initial_ideal(pres);
  CHECK(initial.size() == 28);
  std::set<ZMonomial> expected;
  for (std::size_t i = 2; i < 9; ++i)
    for (std::size_t j = i; j < 9; ++j) expected.insert(zm_mul(zm_var(9, i), zm_var(9, j)));
  CHECK(std::set<ZMonomial>(initial.begin(), initial.end()) == expected);

  const auto powers = power_table(big, 5);
  for (std::uint64_t k = 0; k <= 5; ++k)
    CHECK(standard_monomial_count(initial, 9, k) == powers[k].mu());

  check_degree2_kernel(big, pres);
}

TEST_CASE("presentations of the three-generator examples") {
  const MonomialIdeal concave = make_ideal({{3, 0}, {2, 1}, {0, 2}});
  const PresentationIdeal cp = build_presentation(concave);
  CHECK(cp.binomials.empty());
  CHECK(cp.monomials == std::vector<ZMonomial>{zm_var(3, 2, 2)});
  CHECK(groebner_selfcheck(cp));
  CHECK(initial_ideal(cp) == std::vector<ZMonomial>{zm_var(3, 2, 2)});

  const MonomialIdeal convex = make_ideal({{3, 0}, {1, 1}, {0, 3}});
  const PresentationIdeal vp = build_presentation(convex);
  CHECK(vp.order == TermOrder::Lex);
  CHECK(vp.binomials.empty());
  CHECK(vp.monomials == std::vector<ZMonomial>{zm_mul(zm_var(3, 1), zm_var(3, 3))});
  CHECK(groebner_selfcheck(vp));

  CHECK_THROWS_AS(build_presentation(make_ideal({{9, 0}, {5, 3}, {3, 5}, {0, 9}})),
                  NotApplicable);
}

TEST_CASE("relation membership test") {
  const MonomialIdeal big = concave_m9();
  CHECK(relation_membership_test(big, 2, 8));
  CHECK_FALSE(relation_membership_test(big, 1, 1));
  CHECK(relation_membership_test(make_ideal({{3, 0}, {1, 1}, {0, 3}}), 1, 3));
  CHECK_THROWS_AS(relation_membership_test(big, 0, 2), IndexError);
  CHECK_THROWS_AS(relation_membership_test(big, 2, 10), IndexError);
}

TEST_CASE("the convex fixture presentation is a squarefree Groebner basis") {
  const PresentationIdeal pres = build_presentation(convex_m5());
  CHECK(pres.order == TermOrder::Lex);
  CHECK(pres.binomials.size() == 1);
  CHECK(pres.binomials[0].lead == zm_mul(zm_var(5, 2), zm_var(5, 4)));
  CHECK(pres.binomials[0].trail == zm_var(5, 3, 2));
  CHECK(groebner_selfcheck(pres));
  for (const ZMonomial& mono : initial_ideal(pres))
    for (auto e : mono.exps) CHECK(e <= 1);
}

TEST_CASE("random shaped presentations verify end to end") {
  Rng rng(170001);
  for (int round = 0; round < 12; ++round) {
    const bool concave = round % 2 == 0;
    const MonomialIdeal ideal = random_shaped(rng, concave, 3, 7);
    const PresentationIdeal pres = build_presentation(ideal);
    CHECK(groebner_selfcheck(pres));
    const auto initial = initial_ideal(pres);
    const auto powers = power_table(ideal, 4);
    for (std::uint64_t k = 0; k <= 4; ++k)
      CHECK(standard_monomial_count(initial, ideal.mu(), k) == powers[k].mu());
    if (classify_shape(ideal).is_convex && !classify_shape(ideal).is_concave) {
      for (const ZMonomial& mono : initial)
        for (auto e : mono.exps) CHECK(e <= 1);
    }
    check_degree2_kernel(ideal, pres);
  }
}

TEST_CASE("hilbert data of the running examples") {
  const HilbertData big = hilbert_data(concave_m9(), 6);
  CHECK(big.mu == std::vector<std::uint64_t>{1, 9, 17, 25, 33, 41, 49});
  REQUIRE(big.numerator.has_value());
  CHECK(*big.numerator == std::vector<std::int64_t>{1, 7});

  const HilbertData small = hilbert_data(make_ideal({{6, 0}, {4, 3}, {3, 4}, {0, 6}}), 6);
  REQUIRE(small.numerator.has_value());
  CHECK(*small.numerator == std::vector<std::int64_t>{1, 2});

  const HilbertData large = hilbert_data(make_ideal({{6, 0}, {3, 1}, {1, 3}, {0, 6}}), 8);
  CHECK(large.mu[1] == 4);
  CHECK(large.mu[2] == 7);
  CHECK(large.mu[3] == 10);
  REQUIRE(large.numerator.has_value());
  CHECK(*large.numerator == std::vector<std::int64_t>{1, 2});

  CHECK_THROWS_AS(hilbert_data(concave_m9(), 2), BoundTooSmall);
}

TEST_CASE("hilbert numerators reproduce the mu sequence") {
  Rng rng(170002);
  for (int round = 0; round < 10; ++round) {
    const MonomialIdeal ideal = random_shaped(rng, round % 2 == 0);
    const HilbertData data = hilbert_data(ideal, 6);
    REQUIRE(data.numerator.has_value());
    const std::vector<std::int64_t> expected =
        ideal.mu() == 2 ? std::vector<std::int64_t>{1}
                        : std::vector<std::int64_t>{1, static_cast<std::int64_t>(ideal.mu()) - 2};
    CHECK(*data.numerator == expected);
    for (std::size_t k = 0; k < data.mu.size(); ++k) {
      // Expansion of numerator / (1-t)^2: mu_k = sum_i p_i * (k - i + 1).
      std::int64_t value = 0;
      for (std::size_t i = 0; i < data.numerator->size() && i <= k; ++i)
        value += (*data.numerator)[i] * static_cast<std::int64_t>(k - i + 1);
      CHECK(value == static_cast<std::int64_t>(data.mu[k]));
    }
  }
}

TEST_CASE("presentation serialization is deterministic") {
  const PresentationIdeal pres = build_presentation(convex_m5());
  CHECK(to_string(pres) == "z2*z4 - z3^2, z1*z3, z1*z4, z1*z5, z2*z5, z3*z5");
}

TEST_CASE("standard monomial counting") {
  const std::vector<ZMonomial> blockers{zm_mul(zm_var(4, 1), zm_var(4, 3)),
                                        zm_mul(zm_var(4, 2), zm_var(4, 4)),
                                        zm_mul(zm_var(4, 1), zm_var(4, 4))};
  CHECK(standard_monomial_count(blockers, 4, 0) == 1);
  CHECK(standard_monomial_count(blockers, 4, 1) == 4);
  CHECK(standard_monomial_count(blockers, 4, 2) == 7);
  CHECK(standard_monomial_count(blockers, 4, 3) == 10);
}
