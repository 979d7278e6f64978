#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pst/beta.hpp"
#include "pst/constraints.hpp"

namespace pst {

struct YukawaCoordinateSet {
  std::vector<TensorIndex> lepton;  ///< (k,l) off-diagonal 2x2 blocks, i = j = 1, r = s = 1
  std::vector<TensorIndex> quark;   ///< same blocks with r = s in {2, 3, 4}
};

YukawaCoordinateSet yukawa_coords();

struct PhysicalReport {
  bool lepton_group = false;  ///< some member has a nonzero lepton Yukawa block
  bool quark_group = false;
  bool lepton_each = false;   ///< every lepton Yukawa coordinate is reachable
  bool quark_each = false;
  bool physical = false;      ///< lepton_each && quark_each
  std::vector<std::string> reasons;
};

/// Physical acceptability of a Dirac family: each lepton and each quark
/// Yukawa coordinate must be nonzero for some member of the family.
PhysicalReport physical_report(const DiracFamily& family);
bool is_physical(const DiracFamily& family);

/// J-commutation, optional anticommutation with a grading, optional
/// commutation with beta, optional self-adjointness.
std::vector<Constraint> dirac_constraints(std::optional<GradingTag> grading, const std::optional<Op>& beta,
                                          const std::string& beta_name, bool self_adjoint);

struct Verdict {
  CaseTag case_tag;
  GradingTag grading;
  std::string beta_name;
  std::vector<int> eta;
  BetaFlags beta_flags;
  DiracFamily family;
  std::size_t self_adjoint_dim = 0;
  PhysicalReport physics;
  bool physical = false;
};

Verdict make_verdict(CaseTag c, GradingTag g, const BetaCandidate& beta);

/// Every (case, grading, generic beta candidate) row in fixed order:
/// unreduced, reduced, standard model; gamma before gamma-star.
std::vector<Verdict> verdict_table();
std::vector<Verdict> verdict_table(CaseTag c);

}  // namespace pst
