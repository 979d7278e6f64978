#pragma once

#include <cstdint>

#include "pst/op.hpp"
#include "pst/subspace.hpp"

namespace pst {

/// Real dimension of End(H): 1024 complex entries split into (re, im).
inline constexpr std::size_t kRealDim = 2 * kHilbertDim * kHilbertDim;

/// Real coordinate of the real (part = 0) or imaginary (part = 1) component of x(row, col).
constexpr std::uint32_t real_coord(std::size_t row, std::size_t col, int part) {
  return static_cast<std::uint32_t>(2 * (row * kHilbertDim + col) + part);
}

using RealVec = SparseVec<Rational>;

RealVec realify(const Op& x);
Op unrealify(const RealVec& v);

}  // namespace pst
