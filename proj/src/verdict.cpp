#include "pst/verdict.hpp"

namespace pst {

YukawaCoordinateSet yukawa_coords() {
  YukawaCoordinateSet y;
  std::vector<std::pair<int, int>> blocks;
  for (int k : {1, 2})
    for (int l : {3, 4}) blocks.emplace_back(k, l);
  for (int k : {3, 4})
    for (int l : {1, 2}) blocks.emplace_back(k, l);
  for (const auto& [k, l] : blocks) y.lepton.push_back({k, l, 1, 1, 1, 1});
  for (const auto& [k, l] : blocks)
    for (int r = 2; r <= 4; ++r) y.quark.push_back({k, l, 1, 1, r, r});
  return y;
}

namespace {

// Number of coordinates reached by the family, and whether any is reached.
std::size_t reached(const DiracFamily& f, const std::vector<TensorIndex>& coords) {
  std::size_t n = 0;
  for (const auto& t : coords) {
    const auto [row, col] = t.flat();
    const auto re = real_coord(row - 1, col - 1, 0), im = real_coord(row - 1, col - 1, 1);
    for (const auto& v : f.space.basis()) {
      if (v.find(re) || v.find(im)) {
        ++n;
        break;
      }
    }
  }
  return n;
}

}  // namespace

PhysicalReport physical_report(const DiracFamily& family) {
  const auto y = yukawa_coords();
  PhysicalReport r;
  const std::size_t nl = reached(family, y.lepton), nq = reached(family, y.quark);
  r.lepton_group = nl > 0;
  r.quark_group = nq > 0;
  r.lepton_each = nl == y.lepton.size();
  r.quark_each = nq == y.quark.size();
  r.physical = r.lepton_each && r.quark_each;
  auto note = [&](const char* what, std::size_t n, std::size_t total) {
    if (n < total) {
      r.reasons.push_back(std::string(what) + " Yukawa coordinates reached: " + std::to_string(n) + " of " +
                          std::to_string(total));
    }
  };
  note("lepton", nl, y.lepton.size());
  note("quark", nq, y.quark.size());
  return r;
}

bool is_physical(const DiracFamily& family) { return physical_report(family).physical; }

std::vector<Constraint> dirac_constraints(std::optional<GradingTag> grading, const std::optional<Op>& beta,
                                          const std::string& beta_name, bool self_adjoint) {
  std::vector<Constraint> cs{CommuteWithJ{}};
  if (grading) cs.push_back(AnticommuteWith{pst::grading(*grading), to_string(*grading)});
  if (beta) cs.push_back(CommuteWith{*beta, "beta " + beta_name});
  if (self_adjoint) cs.push_back(SelfAdjoint{});
  return cs;
}

Verdict make_verdict(CaseTag c, GradingTag g, const BetaCandidate& beta) {
  Verdict v{c, g, beta.name, beta.signs, beta.flags, {}, 0, {}, false};
  v.family = solve(dirac_constraints(g, beta.op, beta.name, false), LoweringOrder::Canonical, c);
  v.self_adjoint_dim = solve(dirac_constraints(g, beta.op, beta.name, true), LoweringOrder::Canonical, c).real_dim();
  v.physics = physical_report(v.family);
  v.physical = v.physics.physical;
  return v;
}

std::vector<Verdict> verdict_table(CaseTag c) {
  std::vector<Verdict> out;
  const auto betas = enumerate_generic(c);
  for (GradingTag g : {GradingTag::Gamma, GradingTag::GammaStar}) {
    for (const auto& b : betas) out.push_back(make_verdict(c, g, b));
  }
  return out;
}

std::vector<Verdict> verdict_table() {
  std::vector<Verdict> out;
  for (CaseTag c : {CaseTag::Unreduced, CaseTag::Reduced, CaseTag::StandardModel}) {
    auto rows = verdict_table(c);
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pst
