#include "pst/form.hpp"

#include "pst/error.hpp"
#include "pst/triple.hpp"

namespace pst {

FactorSpan FactorSpan::mask(const std::array<std::string_view, 4>& rows) {
  FactorSpan f;
  for (std::size_t a = 0; a < 4; ++a) {
    if (rows[a].size() != 4) throw ShapeError("factor mask rows must have 4 characters");
    for (std::size_t b = 0; b < 4; ++b) {
      if (rows[a][b] == 'x') f.basis.push_back(Mat::unit(4, a + 1, b + 1));
    }
  }
  return f;
}

FactorSpan FactorSpan::all() { return mask({"xxxx", "xxxx", "xxxx", "xxxx"}); }

std::size_t ParametricForm::free_complex_parameters() const {
  std::size_t n = 0;
  for (const auto& t : terms) n += t.left.size() * t.right.size();
  return n;
}

SubspaceBasis ParametricForm::span() const {
  Echelon<Rational> e(kRealDim);
  const auto i = GaussianRational::i();
  for (const auto& t : terms) {
    for (const auto& a : t.left.basis) {
      for (const auto& b : t.right.basis) {
        const Op m = embed(a, t.i, t.j, b);
        const Op im = m * i;
        if (j_mirror) {
          e.insert(realify(m + j_conjugate(m)));
          e.insert(realify(im + j_conjugate(im)));
        } else {
          e.insert(realify(m));
          e.insert(realify(im));
        }
      }
    }
  }
  return SubspaceBasis::from_echelon(e);
}

bool matches_parametric_form(const SubspaceBasis& space, const ParametricForm& form) {
  return subspace_equal(space, form.span());
}

}  // namespace pst
