#include "pst/commutant.hpp"

#include <stdexcept>

#include "pst/constraints.hpp"
#include "pst/error.hpp"

namespace pst {

CommutantResult commutant(const std::vector<Op>& generators) {
  if (generators.empty()) throw PreconditionError("commutant needs at least one generator");
  std::vector<Constraint> cs;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    cs.push_back(CommuteWith{generators[k], "g" + std::to_string(k + 1)});
  }
  CommutantResult out;
  out.space = solve(cs).space;
  if (out.space.dim() % 2 != 0) throw std::logic_error("commutant has odd real dimension");
  // Complex-linearity: i X stays inside.
  const Echelon<Rational> e = out.space.echelon();
  for (const auto& v : out.space.basis()) {
    if (!e.contains(realify(unrealify(v) * GaussianRational::i()))) {
      throw std::logic_error("commutant is not closed under multiplication by i");
    }
  }
  out.complex_dim = out.space.dim() / 2;
  out.structure = sector_structure(out.space);
  return out;
}

std::vector<SectorReport> sector_structure(const SubspaceBasis& space) {
  std::vector<SectorReport> out;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      SectorReport rep;
      rep.i = i;
      rep.j = j;
      Echelon<Rational> e(kRealDim);
      for (const auto& v : space.basis()) {
        std::vector<std::pair<std::uint32_t, Rational>> raw;
        for (const auto& [k, val] : v.entries) {
          const auto t = TensorIndex::from_flat(static_cast<int>(k / 2 / kHilbertDim) + 1,
                                                static_cast<int>(k / 2 % kHilbertDim) + 1);
          if (t.i != i || t.j != j) continue;
          raw.emplace_back(k, val);
          rep.first_factor[t.k - 1][t.l - 1] = true;
          rep.third_factor[t.r - 1][t.s - 1] = true;
        }
        e.insert(make_sparse(std::move(raw)));
      }
      rep.real_dim = e.rank();
      out.push_back(rep);
    }
  }
  return out;
}

bool is_closed_under_product(const SubspaceBasis& space) {
  const Echelon<Rational> e = space.echelon();
  std::vector<Op> ops;
  for (const auto& v : space.basis()) ops.push_back(unrealify(v));
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      if (!e.contains(realify(a * b))) return false;
    }
  }
  return true;
}

FactorSpan commutant_block_c1() {
  return FactorSpan::of({Mat::diag({1, 1, 0, 0}), Mat::diag({0, 0, 1, 1})});
}

FactorSpan commutant_block_c2() {
  return FactorSpan::of({Mat::diag({1, 0, 0, 0}), Mat::diag({0, 1, 1, 1})});
}

ParametricForm commutant_form_unreduced() {
  return {"commutant-unreduced",
          {{commutant_block_c1(), 1, 1, FactorSpan::all()},
           {FactorSpan::of({Mat::identity(4)}), 2, 2, FactorSpan::all()}},
          false};
}

ParametricForm commutant_form_reduced() {
  return {"commutant-reduced",
          {{commutant_block_c1(), 1, 1, FactorSpan::all()}, {commutant_block_c2(), 2, 2, FactorSpan::all()}},
          false};
}

}  // namespace pst
