#include "pst/realify.hpp"

namespace pst {

RealVec realify(const Op& x) {
  RealVec v;
  for (std::size_t r = 0; r < kHilbertDim; ++r) {
    for (std::size_t c = 0; c < kHilbertDim; ++c) {
      const auto& z = x(r, c);
      if (sgn(z.re()) != 0) v.entries.emplace_back(real_coord(r, c, 0), z.re());
      if (sgn(z.im()) != 0) v.entries.emplace_back(real_coord(r, c, 1), z.im());
    }
  }
  return v;
}

Op unrealify(const RealVec& v) {
  Op x;
  for (const auto& [k, val] : v.entries) {
    if (k >= kRealDim) throw DimensionMismatch("realified vector exceeds 2048 coordinates");
    const std::size_t flat = k / 2;
    auto& z = x(flat / kHilbertDim, flat % kHilbertDim);
    z = (k % 2 == 0) ? GaussianRational(val, z.im()) : GaussianRational(z.re(), val);
  }
  return x;
}

}  // namespace pst
