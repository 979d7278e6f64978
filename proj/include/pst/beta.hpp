#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pst/subspace.hpp"
#include "pst/triple.hpp"

namespace pst {

struct BetaFlags {
  bool is_involution = false;
  bool is_self_adjoint = false;
  bool commutes_with_j = false;
  bool commutes_with_gamma = false;
  bool commutes_with_gamma_star = false;
  bool is_zero_cycle = false;
  bool is_one_term_expressible = false;
  bool is_trivial = false;
};

struct BetaCandidate {
  std::vector<int> signs;  ///< one-term block signs or eta pattern, see `kind`
  enum class Kind { OneTerm, Eta } kind = Kind::OneTerm;
  std::string name;
  Op op;
  BetaFlags flags;
  std::optional<std::vector<int>> witness;  ///< one-term block signs reproducing `op`
};

/// Span of pi(a) J pi(b) J^{-1} over real generator pairs.
struct ZeroCycleSpan {
  CaseTag tag;
  SubspaceBasis space;
};

/// Number of one-term block signs: 3 unreduced, 4 reduced, 3 standard model.
std::size_t one_term_arity(CaseTag c);
/// Number of eta signs of the block-scalar family: 2, 4, 6.
std::size_t eta_arity(CaseTag c);

/// pi(a) J pi(a) J^{-1} for a the sign-scaled unit; throws DimensionMismatch
/// on a wrong number of signs.
Op one_term_op(CaseTag c, const std::vector<int>& signs);
BetaCandidate one_term_beta(CaseTag c, const std::vector<int>& signs);

/// Projectors P_k with beta = sum_k eta_k P_k, in eta order.
std::vector<Op> eta_projectors(CaseTag c);
Op eta_op(CaseTag c, const std::vector<int>& eta);

/// Distinct operators up to global sign, lexicographic in the signs (+ first);
/// each representative has +1 at the first basis vector.
std::vector<BetaCandidate> enumerate_one_term(CaseTag c);

/// Self-adjoint J- and gamma-commuting involutions in the commutant, up to
/// global sign, with eta_1 = +1 and the rest lexicographic (+ first).
std::vector<BetaCandidate> enumerate_generic(CaseTag c);

/// The solved space of self-adjoint J- and gamma-commuting elements of the
/// commutant; throws std::logic_error unless it is spanned by orthogonal
/// diagonal projectors summing to one.
std::vector<Op> block_scalar_projectors(CaseTag c);

/// Cached per case.
const ZeroCycleSpan& zero_cycle_span(CaseTag c);
bool is_zero_cycle(const Op& op, CaseTag c);

/// First sign pattern (lexicographic, + first) of invertible unit blocks
/// with pi(a) J pi(a) J^{-1} = op.
std::optional<std::vector<int>> one_term_expressible(const Op& op, CaseTag c);

/// Reduced-case list b1..b8 built term by term from the displayed block sums.
std::vector<Op> reduced_reference_betas();

/// Named beta for a case: identity, nontrivial, case2, final, b1..b8, a
/// one-term sign string such as "+-+" or "eta:+-+-". Throws UsageError.
Op beta_by_name(CaseTag c, const std::string& name);

std::string sign_string(const std::vector<int>& signs);

}  // namespace pst
