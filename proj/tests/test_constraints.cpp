#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pst/beta.hpp"
#include "pst/error.hpp"
#include "pst/sample.hpp"
#include "pst/verdict.hpp"

using namespace pst;

namespace {

const GaussianRational I = GaussianRational::i();

// Independent spanning set of the dagger-fixed operators.
SubspaceBasis hermitian_space() {
  std::vector<RealVec> gens;
  for (std::size_t a = 0; a < kHilbertDim; ++a) {
    for (std::size_t b = a; b < kHilbertDim; ++b) {
      Op x, y;
      x(a, b) += 1;
      x(b, a) += 1;
      y(a, b) += I;
      y(b, a) -= I;
      gens.push_back(realify(x));
      if (a != b) gens.push_back(realify(y));
    }
  }
  return SubspaceBasis::span(kRealDim, gens);
}

std::vector<TensorIndex> sector_coords(int i, int j) {
  std::vector<TensorIndex> out;
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l)
      for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s) out.push_back({k, l, i, j, r, s});
  return out;
}

const Op beta_nt = one_term_op(CaseTag::Unreduced, {1, -1, 1});
const Op beta_case2 = one_term_op(CaseTag::Reduced, {-1, 1, 1, -1});
const Op beta_final = one_term_op(CaseTag::Reduced, {1, 1, 1, -1});

}  // namespace

TEST_CASE("realify examples") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const Op x = random_op(rng, 50), y = random_op(rng, 50);
    CHECK(unrealify(realify(x)) == x);
    CHECK(realify(x + y) == make_sparse([&] {
            auto raw = realify(x).entries;
            const auto more = realify(y).entries;
            raw.insert(raw.end(), more.begin(), more.end());
            return raw;
          }()));
    auto scaled = realify(x);
    scale_in_place(scaled, make_rational(-3, 2));
    CHECK(realify(x * GaussianRational(make_rational(-3, 2))) == scaled);
  }
  const RealVec v = realify(Op::identity() * I);
  CHECK(v.nnz() == 32);
  for (const auto& [k, val] : v.entries) {
    CHECK(k % 2 == 1);
    CHECK(val == 1);
  }
}

TEST_CASE("solve basic families") {
  CHECK(solve({CommuteWith{Op::identity(), "1"}}).real_dim() == 2048);
  CHECK(solve({}).real_dim() == 2048);
  CHECK(solve({CommuteWithJ{}}).real_dim() == 1024);
  CHECK(solve({SelfAdjoint{}}).real_dim() == 1024);
}

TEST_CASE("anticommuting with gamma") {
  const auto f = solve({CommuteWithJ{}, AnticommuteWith{gamma(), "gamma"}});
  // displayed family: e11 off-diagonal blocks 8 * 16, two e12 patterns 8 * 8 each
  CHECK(f.real_dim() == 2 * (8 * 16 + 8 * 8 + 8 * 8));
  CHECK(f.real_dim() == oracle::diagonal_count({{gamma(), -1}}));
  CHECK(dirac_form_anti_gamma().free_complex_parameters() == 256);
  CHECK(matches_parametric_form(f.space, dirac_form_anti_gamma()));
  CHECK_FALSE(matches_parametric_form(f.space, dirac_form_anti_gamma_star()));
}

TEST_CASE("anticommuting with gamma-star") {
  const auto f = solve({CommuteWithJ{}, AnticommuteWith{gamma_star(), "gamma-star"}});
  CHECK(f.real_dim() == 2 * (8 * 6 + 8 * 10 + 8 * 8 + 8 * 8));
  CHECK(f.real_dim() == oracle::diagonal_count({{gamma_star(), -1}}));
  CHECK(matches_parametric_form(f.space, dirac_form_anti_gamma_star()));
}

TEST_CASE("beta-compatible families") {
  SUBCASE("nontrivial") {
    const auto f = solve({CommuteWithJ{}, CommuteWith{beta_nt, "beta"}});
    CHECK(f.real_dim() == 2 * (8 * 16 + 8 * 8 + 8 * 8));
    CHECK(f.real_dim() == oracle::diagonal_count({{beta_nt, 1}}));
    CHECK(matches_parametric_form(f.space, dirac_form_beta_nontrivial()));
  }
  SUBCASE("case2") {
    const auto f = solve({CommuteWithJ{}, CommuteWith{beta_case2, "beta"}});
    CHECK(f.real_dim() == 2 * (8 * 10 + 8 * 6 + 8 * 8 + 8 * 8));
    CHECK(f.real_dim() == oracle::diagonal_count({{beta_case2, 1}}));
    CHECK(matches_parametric_form(f.space, dirac_form_beta_case2()));
  }
  SUBCASE("final") {
    const auto f = solve({CommuteWithJ{}, CommuteWith{beta_final, "beta"}});
    CHECK(f.real_dim() == 2 * (16 * 10 + 4 * 4 + 12 * 12));
    CHECK(f.real_dim() == oracle::diagonal_count({{beta_final, 1}}));
    CHECK(matches_parametric_form(f.space, dirac_form_beta_final()));
  }
  SUBCASE("gamma-star and final") {
    const auto f =
        solve({CommuteWithJ{}, AnticommuteWith{gamma_star(), "gamma-star"}, CommuteWith{beta_final, "beta"}});
    CHECK(f.real_dim() == 2 * (80 + 80));
    CHECK(f.real_dim() == oracle::diagonal_count({{gamma_star(), -1}, {beta_final, 1}}));
    CHECK(matches_parametric_form(f.space, dirac_form_gamma_final()));
  }
}

TEST_CASE("constraint order does not change the solution") {
  std::vector<Constraint> cs{SelfAdjoint{}, CommuteWith{beta_final, "beta"}, AnticommuteWith{gamma(), "gamma"},
                             CommuteWithJ{}};
  const auto base = solve(cs);
  std::sort(cs.begin(), cs.end(), [](const Constraint& a, const Constraint& b) { return a.index() < b.index(); });
  do {
    CHECK(solve(cs, LoweringOrder::AsGiven).space == base.space);
  } while (std::next_permutation(cs.begin(), cs.end(),
                                 [](const Constraint& a, const Constraint& b) { return a.index() < b.index(); }));
}

TEST_CASE("solution spaces shrink as constraints are added") {
  const std::vector<Constraint> pool{CommuteWithJ{}, AnticommuteWith{gamma(), "gamma"},
                                     AnticommuteWith{gamma_star(), "gamma-star"}, CommuteWith{beta_final, "beta"},
                                     SelfAdjoint{}};
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<Constraint> s;
    for (unsigned k = 0; k < 5; ++k)
      if (mask & (1u << k)) s.push_back(pool[k]);
    const auto small = solve(s);
    for (unsigned k = 0; k < 5; ++k) {
      if (mask & (1u << k)) continue;
      auto t = s;
      t.push_back(pool[k]);
      CHECK(subspace_contains(small.space, solve(t).space));
    }
  }
}

TEST_CASE("self-adjoint sub-family is the intersection with hermitian operators") {
  const auto herm = hermitian_space();
  CHECK(herm.dim() == 1024);
  for (const auto& base : std::vector<std::vector<Constraint>>{
           {CommuteWithJ{}, AnticommuteWith{gamma(), "gamma"}},
           {CommuteWithJ{}, CommuteWith{beta_case2, "beta"}},
           {CommuteWithJ{}, AnticommuteWith{gamma_star(), "gamma-star"}, CommuteWith{beta_final, "beta"}}}) {
    auto with = base;
    with.push_back(SelfAdjoint{});
    CHECK(solve(with).space == subspace_intersect(solve(base).space, herm));
  }
}

TEST_CASE("every solution basis element satisfies its constraints") {
  const std::vector<Constraint> cs{CommuteWithJ{}, AnticommuteWith{gamma(), "gamma"}, SelfAdjoint{}};
  const auto f = solve(cs);
  for (const auto& v : f.space.basis()) {
    const Op x = unrealify(v);
    CHECK(j_conjugate(x) == x);
    CHECK(anticommutator(x, gamma()).is_zero());
    CHECK(dagger(x) == x);
  }
  CHECK_FALSE(satisfies(Op::identity(), AnticommuteWith{gamma(), "gamma"}));
  CHECK(satisfies(gamma(), CommuteWith{gamma_star(), "gamma-star"}));
}

TEST_CASE("membership constraint") {
  const auto herm = hermitian_space();
  CHECK(solve({MemberOf{herm, "hermitian"}}).space == solve({SelfAdjoint{}}).space);
  CHECK_THROWS_AS(solve({MemberOf{SubspaceBasis::full(3), "bad"}}), DimensionMismatch);
}

TEST_CASE("self-adjointness coefficient condition") {
  CHECK(selfadjoint_coefficient_check(Op::identity()));
  const Op e12 = embed(Mat::unit(4, 1, 2), 1, 1, Mat::identity(4));
  const Op e21 = embed(Mat::unit(4, 2, 1), 1, 1, Mat::identity(4));
  CHECK_FALSE(selfadjoint_coefficient_check(e12));
  CHECK(selfadjoint_coefficient_check(e12 + e21));
  std::mt19937_64 rng(32);
  int positive = 0;
  for (int t = 0; t < 1000; ++t) {
    const Op x = random_mixed_op(rng, t % 5);
    const bool expected = dagger(x) == x;
    CHECK(selfadjoint_coefficient_check(x) == expected);
    positive += expected;
  }
  CHECK(positive > 100);
}

TEST_CASE("J-commutation coefficient condition") {
  CHECK(j_commute_coefficient_check(Op::identity()));
  CHECK_FALSE(j_commute_coefficient_check(embed(Mat::identity(4), 1, 1, Mat::identity(4))));
  std::mt19937_64 rng(33);
  int positive = 0;
  for (int t = 0; t < 1000; ++t) {
    const Op x = random_mixed_op(rng, t % 5);
    const bool expected = j_conjugate(x) == x;
    CHECK(j_commute_coefficient_check(x) == expected);
    CHECK(j_commute_coefficient_check(x + j_conjugate(x)));
    positive += expected;
  }
  CHECK(positive > 100);
}

TEST_CASE("D0 split") {
  const auto s = split_D0(Op::identity());
  CHECK(s.d0 == embed(Mat::identity(4), 1, 1, Mat::identity(4)));
  CHECK(s.d0 + s.d1 == Op::identity());
  CHECK_THROWS_AS(split_D0(embed(Mat::identity(4), 1, 1, Mat::identity(4))), PreconditionError);
  std::mt19937_64 rng(34);
  for (int t = 0; t < 50; ++t) {
    const Op x = random_op(rng, 40);
    const Op d = x + j_conjugate(x);
    const auto p = split_D0(d);
    CHECK(p.d0 + j_conjugate(p.d0) == d);
    CHECK(p.d1 == j_conjugate(p.d0));
  }
}

TEST_CASE("commutation with D reduces to commutation with D0") {
  std::mt19937_64 rng(35);
  int vanish_c = 0, vanish_a = 0;
  for (int t = 0; t < 200; ++t) {
    const int alpha = t % 2 ? -1 : 1;
    const Op a = random_sector_diagonal(rng, alpha);
    CHECK(j_conjugate(a) == a * GaussianRational(alpha));
    Op d0 = random_d0(rng, 5);
    const bool anti = (t / 2) % 2;
    if ((t / 4) % 2) {
      for (std::size_t r = 0; r < kHilbertDim; ++r)
        for (std::size_t c = 0; c < kHilbertDim; ++c)
          if (anti ? a(r, r) != -a(c, c) : a(r, r) != a(c, c)) d0(r, c) = 0;
    }
    const Op d = d0 + j_conjugate(d0);
    const Op s0 = split_D0(d).d0;
    CHECK(s0 == d0);
    if (anti) {
      const bool lhs = anticommutator(a, d).is_zero();
      CHECK(lhs == anticommutator(a, s0).is_zero());
      vanish_a += lhs;
    } else {
      const bool lhs = commutator(a, d).is_zero();
      CHECK(lhs == commutator(a, s0).is_zero());
      vanish_c += lhs;
    }
  }
  // both outcomes occur for both variants
  CHECK(vanish_c > 0);
  CHECK(vanish_c < 100);
  CHECK(vanish_a > 0);
  CHECK(vanish_a < 100);
}

TEST_CASE("Riemannian restriction") {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 20; ++t) {
    const Op x = random_op(rng, 30);
    const Op h = x + dagger(x), k = x - dagger(x);
    CHECK(riemannian_restriction(h) == h);
    CHECK(riemannian_restriction(k).is_zero());
    const Op r = riemannian_restriction(x);
    CHECK(riemannian_restriction(r) == r);
    CHECK(dagger(r) == r);
  }
}

TEST_CASE("coordinate projection") {
  const auto full = solve({});
  const std::vector<TensorIndex> some{{1, 3, 1, 1, 1, 1}, {2, 2, 1, 2, 3, 4}};
  CHECK(coordinate_projection(full, some).dim() == 4);
  CHECK_THROWS_AS(coordinate_projection(full, {}), PreconditionError);

  const auto nt = solve({CommuteWithJ{}, AnticommuteWith{gamma(), "gamma"}, CommuteWith{beta_nt, "beta"}});
  CHECK(coordinate_projection(nt, sector_coords(1, 1)).dim() == 0);
  CHECK(coordinate_projection(nt, sector_coords(2, 2)).dim() == 0);

  const auto dg =
      solve({CommuteWithJ{}, AnticommuteWith{gamma_star(), "gamma-star"}, CommuteWith{beta_final, "beta"}});
  // Z = e12 in the lepton slot of the displayed family
  const Op z = embed(Mat::unit(4, 1, 3), 1, 1, Mat::unit(4, 1, 1));
  CHECK(dg.space.contains_vector(realify(z + j_conjugate(z))));
  CHECK(coordinate_projection(dg, yukawa_coords().lepton).dim() > 0);
}
