#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"

#include "pst/beta.hpp"
#include "pst/error.hpp"
#include "pst/realify.hpp"

using namespace pst;

namespace {

using oracle::displays;
using oracle::fourth_as_printed;
const Mat I4 = Mat::identity(4);

AlgebraElement reduced_element(const GaussianRational& q1, const GaussianRational& q2, const GaussianRational& l,
                               const GaussianRational& n) {
  return {{Mat::identity(2) * q1, Mat::identity(2) * q2, Mat{{l}}, Mat::identity(3) * n}};
}

}  // namespace

TEST_CASE("one-term betas") {
  const auto id = one_term_beta(CaseTag::Unreduced, {1, 1, 1});
  CHECK(id.op == Op::identity());
  CHECK(id.flags.is_trivial);
  const auto nt = one_term_beta(CaseTag::Unreduced, {1, -1, 1});
  CHECK_FALSE(nt.flags.is_trivial);
  CHECK(nt.name == "nontrivial");
  CHECK(one_term_op(CaseTag::Unreduced, {-1, 1, -1}) == nt.op);
  CHECK_THROWS_AS(one_term_beta(CaseTag::Unreduced, {1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(one_term_beta(CaseTag::Reduced, {1, 1, 1}), DimensionMismatch);
}

TEST_CASE("one-term enumeration") {
  const auto u = enumerate_one_term(CaseTag::Unreduced);
  CHECK(u.size() == 2);
  const auto r = enumerate_one_term(CaseTag::Reduced);
  CHECK(r.size() == 4);
  int nontrivial = 0;
  for (const auto* list : {&u, &r}) {
    for (const auto& b : *list) {
      CHECK(b.flags.is_involution);
      CHECK(b.flags.is_self_adjoint);
      CHECK(b.flags.commutes_with_j);
      CHECK(b.flags.commutes_with_gamma);
      nontrivial += !b.flags.is_trivial;
    }
  }
  CHECK(nontrivial == 1 + 3);
  // every sign pattern gives one of the listed operators up to sign
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<int> s;
    for (int k = 3; k >= 0; --k) s.push_back(mask >> k & 1 ? -1 : 1);
    const Op op = one_term_op(CaseTag::Reduced, s);
    int hits = 0;
    for (const auto& b : r) hits += b.op == op || b.op == -op;
    CHECK(hits == 1);
  }
}

TEST_CASE("the printed fourth entry needs the corrected lambda-row block") {
  CHECK_FALSE(j_conjugate(fourth_as_printed()) == fourth_as_printed());
  CHECK(j_conjugate(displays()[3]) == displays()[3]);
}

TEST_CASE("generic enumeration, reduced case") {
  const auto gen = enumerate_generic(CaseTag::Reduced);
  REQUIRE(gen.size() == 8);
  const auto disp = displays();
  std::set<std::string> names, expressible;
  for (const auto& b : gen) {
    int match = -1;
    for (std::size_t k = 0; k < disp.size(); ++k)
      if (b.op == disp[k]) match = static_cast<int>(k);
    REQUIRE(match >= 0);
    CHECK(b.name == "b" + std::to_string(match + 1));
    names.insert(b.name);
    CHECK(b.flags.is_zero_cycle);
    CHECK(b.flags.is_involution);
    CHECK(b.flags.commutes_with_j);
    CHECK(b.flags.commutes_with_gamma);
    if (b.flags.is_one_term_expressible) expressible.insert(b.name);
  }
  CHECK(names.size() == 8);
  CHECK(expressible == std::set<std::string>{"b1", "b3", "b6", "b7"});
  for (const auto& b : enumerate_one_term(CaseTag::Reduced)) {
    bool found = false;
    for (const auto& g : gen) found = found || g.op == b.op;
    CHECK(found);
  }
}

TEST_CASE("generic enumeration, unreduced case equals the one-term set") {
  const auto gen = enumerate_generic(CaseTag::Unreduced);
  const auto one = enumerate_one_term(CaseTag::Unreduced);
  REQUIRE(gen.size() == 2);
  for (const auto& b : one) CHECK((b.op == gen[0].op || b.op == gen[1].op));
}

TEST_CASE("generic enumeration, standard model") {
  const auto gen = enumerate_generic(CaseTag::StandardModel);
  CHECK(gen.size() == 64 / 2);
  for (std::size_t a = 0; a < gen.size(); ++a) {
    CHECK(gen[a].flags.commutes_with_j);
    CHECK(gen[a].flags.commutes_with_gamma);
    CHECK(gen[a].flags.is_zero_cycle);
    for (std::size_t b = a + 1; b < gen.size(); ++b) {
      CHECK_FALSE(gen[a].op == gen[b].op);
      CHECK_FALSE(gen[a].op == -gen[b].op);
    }
  }
}

TEST_CASE("two-term zero-cycle witnesses") {
  // beta = pi(1,0,e1,e2) J pi(1,0,e1,e2) J^-1 + pi(0,1,e3,e4) J pi(0,1,e3,e4) J^-1
  for (const auto& b : enumerate_generic(CaseTag::Reduced)) {
    const auto& e = b.signs;
    const Op x = rep(CaseTag::Reduced, reduced_element(1, 0, e[0], e[1]));
    const Op y = rep(CaseTag::Reduced, reduced_element(0, 1, e[2], e[3]));
    CHECK(x * j_conjugate(x) + y * j_conjugate(y) == b.op);
  }
  CHECK(is_zero_cycle(displays()[6], CaseTag::Reduced));
}

TEST_CASE("zero-cycle span") {
  for (CaseTag c : {CaseTag::Unreduced, CaseTag::Reduced, CaseTag::StandardModel}) {
    const auto& z = zero_cycle_span(c);
    CHECK(z.space.contains_vector(realify(Op::identity())));
    // closed under the left action of the algebra
    const auto gens = algebra_case(c).real_generators;
    for (std::size_t k = 0; k < z.space.basis().size(); k += 7) {
      const Op x = unrealify(z.space.basis()[k]);
      for (std::size_t g = 0; g < gens.size(); g += 3) CHECK(z.space.contains_vector(realify(gens[g] * x)));
    }
  }
  CHECK(is_zero_cycle(gamma_star(), CaseTag::Unreduced));
  // the left and right actions both preserve the chiral sectors
  CHECK_FALSE(is_zero_cycle(embed(I4, 1, 2, I4) + embed(I4, 2, 1, I4), CaseTag::Unreduced));
}

TEST_CASE("one-term witnesses") {
  const auto disp = displays();
  const auto w3 = one_term_expressible(disp[2], CaseTag::Reduced);
  REQUIRE(w3);
  CHECK(*w3 == std::vector<int>{1, -1, 1, 1});
  CHECK_FALSE(one_term_expressible(disp[1], CaseTag::Reduced));
  CHECK(is_zero_cycle(disp[1], CaseTag::Reduced));
  CHECK(*one_term_expressible(Op::identity(), CaseTag::Reduced) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("named betas") {
  CHECK(beta_by_name(CaseTag::Reduced, "final") == displays()[6]);
  CHECK(beta_by_name(CaseTag::Reduced, "case2") == -displays()[5]);
  CHECK(beta_by_name(CaseTag::Reduced, "b4") == displays()[3]);
  CHECK(beta_by_name(CaseTag::Unreduced, "+-+") == one_term_op(CaseTag::Unreduced, {1, -1, 1}));
  CHECK(beta_by_name(CaseTag::StandardModel, "eta:+-+-+-") == beta_by_name(CaseTag::StandardModel, "final"));
  CHECK_THROWS_AS(beta_by_name(CaseTag::Unreduced, "b7"), UsageError);
  CHECK_THROWS_AS(beta_by_name(CaseTag::Unreduced, "case2"), UsageError);
  CHECK_THROWS_AS(beta_by_name(CaseTag::Reduced, "+-"), UsageError);
  CHECK_THROWS_AS(beta_by_name(CaseTag::Reduced, "zeta"), UsageError);
}
