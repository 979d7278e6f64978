#include "pst/sample.hpp"

namespace pst {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

GaussianRational random_scalar(std::mt19937_64& rng) {
  Rational re = make_rational(uniform(rng, -3, 3), uniform(rng, 1, 3));
  Rational im = make_rational(uniform(rng, -3, 3), uniform(rng, 1, 3));
  return {std::move(re), std::move(im)};
}

Op random_op(std::mt19937_64& rng, std::size_t nnz) {
  Op x;
  const int n = static_cast<int>(kHilbertDim) - 1;
  for (std::size_t k = 0; k < nnz; ++k) {
    x(uniform(rng, 0, n), uniform(rng, 0, n)) = random_scalar(rng);
  }
  return x;
}

Op random_mixed_op(std::mt19937_64& rng, int kind) {
  Op x = random_op(rng, static_cast<std::size_t>(uniform(rng, 1, 40)));
  switch (kind) {
    case 1:
      return x + dagger(x);
    case 2:
      return x + j_conjugate(x);
    case 3: {
      const Op h = x + dagger(x);
      return h + j_conjugate(h);
    }
    case 4: {
      Op h = x + dagger(x);
      const int n = static_cast<int>(kHilbertDim) - 1;
      h(uniform(rng, 0, n), uniform(rng, 0, n)) += random_scalar(rng);
      return h;
    }
    default:
      return x;
  }
}

Op random_sector_diagonal(std::mt19937_64& rng, int alpha) {
  std::vector<GaussianRational> d1(4), d2(4);
  for (auto& v : d1) v = uniform(rng, -1, 1);
  for (auto& v : d2) v = uniform(rng, -1, 1);
  const Op a11 = embed(Mat::diag(d1), 1, 1, Mat::diag(d2));
  return a11 + j_conjugate(a11) * GaussianRational(alpha);
}

Op random_d0(std::mt19937_64& rng, std::size_t nnz) {
  Op x;
  for (std::size_t k = 0; k < nnz; ++k) {
    const int j = uniform(rng, 1, 2);
    Mat a(4, 4), b(4, 4);
    a(uniform(rng, 0, 3), uniform(rng, 0, 3)) = 1;
    b(uniform(rng, 0, 3), uniform(rng, 0, 3)) = 1;
    x += embed(a, 1, j, b) * random_scalar(rng);
  }
  return x;
}

}  // namespace pst
