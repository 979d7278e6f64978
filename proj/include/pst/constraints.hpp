#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pst/form.hpp"
#include "pst/triple.hpp"

namespace pst {

struct CommuteWith {
  Op op;
  std::string name;
};
struct AnticommuteWith {
  Op op;
  std::string name;
};
struct CommuteWithJ {};
struct SelfAdjoint {};
struct MemberOf {
  SubspaceBasis space;
  std::string name;
};

using Constraint = std::variant<CommuteWith, AnticommuteWith, CommuteWithJ, SelfAdjoint, MemberOf>;

std::string describe(const Constraint& c);

/// Exact check of a single operator against a constraint.
bool satisfies(const Op& x, const Constraint& c);

enum class LoweringOrder {
  Canonical,  ///< J, gradings (anticommutation), commutation, membership, self-adjointness
  AsGiven,
};

struct DiracFamily {
  SubspaceBasis space;
  std::vector<Constraint> constraints;
  std::optional<CaseTag> case_tag;

  std::size_t real_dim() const { return space.dim(); }
};

/// Simultaneous real solution space of the constraints inside End(H).
/// Every basis element is re-checked against every constraint; a failure
/// throws std::logic_error.
DiracFamily solve(const std::vector<Constraint>& constraints,
                  LoweringOrder order = LoweringOrder::Canonical,
                  std::optional<CaseTag> case_tag = std::nullopt);

/// Real equations (over the 2048 realified coordinates) of one constraint.
std::vector<RealVec> lower(const Constraint& c);

/// Coefficient form of self-adjointness: D_{ijklrs} = conj D_{jilksr}.
bool selfadjoint_coefficient_check(const Op& x);

/// Coefficient form of J-commutation: D_{11klrs} = conj D_{22rskl} and
/// D_{12klrs} = conj D_{21rskl}.
bool j_commute_coefficient_check(const Op& x);

/// Sector part of d in e11 and e12.
Op sector_part(const Op& d, int i, int j);

struct D0Split {
  Op d0;
  Op d1;
};

/// d = d0 + J d0 J^{-1} with d0 the e11 and e12 sector parts; requires
/// j_commute_coefficient_check(d), otherwise throws PreconditionError.
D0Split split_D0(const Op& d);

/// (d + d*) / 2.
Op riemannian_restriction(const Op& d);

/// Image of the family under restriction to the given tensor coordinates.
/// The result lives in ambient dimension 2 * coords.size(), coordinate order
/// as given with (re, im) interleaved.
SubspaceBasis coordinate_projection(const DiracFamily& family, const std::vector<TensorIndex>& coords);

// Displayed Dirac families as parametric forms.
ParametricForm dirac_form_anti_gamma();
ParametricForm dirac_form_anti_gamma_star();
ParametricForm dirac_form_beta_nontrivial();
ParametricForm dirac_form_beta_case2();
ParametricForm dirac_form_beta_final();
/// Family anticommuting with gamma-star and commuting with the final beta.
ParametricForm dirac_form_gamma_final();

}  // namespace pst
