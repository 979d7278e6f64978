#pragma once

#include <random>

#include "pst/triple.hpp"

namespace pst {

/// Small Gaussian rational with numerators in [-3, 3] and denominators in [1, 3].
GaussianRational random_scalar(std::mt19937_64& rng);

/// Operator with `nnz` random entries at random positions.
Op random_op(std::mt19937_64& rng, std::size_t nnz);

/// Random operator drawn so that self-adjoint and J-fixed cases both occur:
/// kind 0 generic, 1 Hermitian, 2 J-fixed, 3 Hermitian and J-fixed,
/// 4 Hermitian with one entry perturbed.
Op random_mixed_op(std::mt19937_64& rng, int kind);

/// Sector-diagonal A = A11 + alpha J A11 J^{-1} with diagonal A11 in the e11
/// sector, so that A J = alpha J A.
Op random_sector_diagonal(std::mt19937_64& rng, int alpha);

/// Random operator supported in the e11 and e12 sectors.
Op random_d0(std::mt19937_64& rng, std::size_t nnz);

}  // namespace pst
