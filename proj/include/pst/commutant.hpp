#pragma once

#include <array>
#include <vector>

#include "pst/form.hpp"
#include "pst/triple.hpp"

namespace pst {

/// Support of a subspace inside one (i, j) sector.
struct SectorReport {
  int i = 1;
  int j = 1;
  std::size_t real_dim = 0;  ///< dimension of the projection onto this sector
  std::array<std::array<bool, 4>, 4> first_factor{};  ///< (k, l) positions hit
  std::array<std::array<bool, 4>, 4> third_factor{};  ///< (r, s) positions hit
};

struct CommutantResult {
  SubspaceBasis space;
  std::size_t complex_dim = 0;
  std::vector<SectorReport> structure;
};

/// {X : [X, g] = 0 for every g}. Throws PreconditionError on an empty list.
CommutantResult commutant(const std::vector<Op>& generators);

std::vector<SectorReport> sector_structure(const SubspaceBasis& space);

/// True when the span of the basis is closed under multiplication.
bool is_closed_under_product(const SubspaceBasis& space);

/// C1 = {diag(a 1_2, b 1_2)}, C2 = {diag(a, b 1_3)}.
FactorSpan commutant_block_c1();
FactorSpan commutant_block_c2();

/// A1 (x) e11 (x) E1 + 1_4 (x) e22 (x) E2,  A1 in C1.
ParametricForm commutant_form_unreduced();
/// A1 (x) e11 (x) E1 + A2 (x) e22 (x) E2,  A1 in C1, A2 in C2.
ParametricForm commutant_form_reduced();

}  // namespace pst
