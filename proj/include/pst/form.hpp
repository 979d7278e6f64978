#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pst/realify.hpp"

namespace pst {

/// Complex span of 4x4 matrices filling one outer tensor factor.
struct FactorSpan {
  std::vector<Mat> basis;

  /// Matrix units at the 'x' positions of a 4x4 pattern, rows top to bottom.
  static FactorSpan mask(const std::array<std::string_view, 4>& rows);
  static FactorSpan all();
  static FactorSpan of(std::vector<Mat> mats) { return {std::move(mats)}; }

  std::size_t size() const { return basis.size(); }
};

/// Block-pattern monomial  left (x) e_ij (x) right  with free slots.
struct FormTerm {
  FactorSpan left;
  int i = 1;
  int j = 1;
  FactorSpan right;
};

/// A displayed family  sum_k (terms)  as a spanning recipe.
///
/// With `j_mirror` the family is {D0 + J D0 J^{-1}} where D0 ranges over the
/// complex span of the terms; otherwise it is that complex span itself.
struct ParametricForm {
  std::string name;
  std::vector<FormTerm> terms;
  bool j_mirror = false;

  /// Number of free complex slots, counted from the factor spans.
  std::size_t free_complex_parameters() const;
  /// Real span of the instantiated family.
  SubspaceBasis span() const;
};

bool matches_parametric_form(const SubspaceBasis& space, const ParametricForm& form);

}  // namespace pst
