#pragma once

#include <vector>

#include "pst/op.hpp"
#include "pst/triple.hpp"

namespace oracle {

/// For diagonal sign operators, the J-fixed part of
///   {X : X g = s g X for every (g, s)}
/// has real dimension equal to the number of matrix positions (a, b) with
/// g_aa = s g_bb for all pairs: each position is a free complex slot, and
/// J fixes a real form of that complex space.
inline std::size_t diagonal_count(const std::vector<std::pair<pst::Op, int>>& rel) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < pst::kHilbertDim; ++a) {
    for (std::size_t b = 0; b < pst::kHilbertDim; ++b) {
      bool ok = true;
      for (const auto& [g, s] : rel) ok = ok && g(a, a) == g(b, b) * pst::GaussianRational(s);
      n += ok;
    }
  }
  return n;
}

// Reduced-case beta list, built term by term from the block displays.
namespace displayed {

using namespace pst;

inline Mat D(std::vector<GaussianRational> d) { return Mat::diag(d); }

inline const Mat I4 = Mat::identity(4);
inline const Mat P = D({1, 1, 0, 0}), Q = D({0, 0, 1, 1}), R = D({1, 0, 0, 0}), S = D({0, 1, 1, 1});
inline const Mat s13 = D({1, -1, -1, -1});
inline const Mat s22 = D({1, 1, -1, -1});

inline std::vector<Op> displays() {
  return {
      Op::identity(),
      embed(P, 1, 1, I4) + embed(Q, 1, 1, s13) + embed(R, 2, 2, I4) + embed(S, 2, 2, s22),
      embed(s22, 1, 1, I4) + embed(I4, 2, 2, s22),
      embed(P, 1, 1, I4) + embed(Q, 1, 1, D({-1, 1, 1, 1})) + embed(R, 2, 2, s22) + embed(S, 2, 2, I4),
      embed(P, 1, 1, s13) + embed(Q, 1, 1, I4) + embed(R, 2, 2, I4) + embed(S, 2, 2, D({-1, -1, 1, 1})),
      embed(s22, 1, 1, s13) + embed(s13, 2, 2, s22),
      embed(I4, 1, 1, s13) + embed(s13, 2, 2, I4),
      embed(P, 1, 1, s13) + embed(-Q, 1, 1, I4) + embed(R, 2, 2, s22) + embed(-S, 2, 2, I4),
  };
}

// The fourth entry with its lambda-row block printed as diag(-1_2, 1_2).
inline Op fourth_as_printed() {
  return embed(P, 1, 1, I4) + embed(Q, 1, 1, D({-1, 1, 1, 1})) + embed(R, 2, 2, D({-1, -1, 1, 1})) +
         embed(S, 2, 2, I4);
}

}  // namespace displayed

using displayed::displays;
using displayed::fourth_as_printed;

}  // namespace oracle
