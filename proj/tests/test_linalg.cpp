#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "pst/mat.hpp"
#include "pst/sample.hpp"

using namespace pst;

namespace {

const GaussianRational I = GaussianRational::i();

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int density_pct = 60) {
  Mat m(r, c);
  std::uniform_int_distribution<int> pct(0, 99);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < c; ++b)
      if (pct(rng) < density_pct) m(a, b) = random_scalar(rng);
  return m;
}

}  // namespace

TEST_CASE("gaussian rationals stay canonical") {
  const GaussianRational a(make_rational(2, 4), make_rational(-3, 6));
  CHECK(a.re() == make_rational(1, 2));
  CHECK(a.im().get_den() == 2);
  CHECK(a == GaussianRational(make_rational(1, 2), make_rational(-1, 2)));
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK(I * I == GaussianRational(-1));
  CHECK(a.conj().conj() == a);
  CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
}

TEST_CASE("gaussian rational text round trip") {
  for (const auto& z : {GaussianRational(0), GaussianRational(make_rational(-7, 3)), I,
                        GaussianRational(make_rational(1, 2), make_rational(-5, 4))}) {
    CHECK(parse_gaussian(to_string(z)) == z);
  }
  CHECK(to_string(GaussianRational(make_rational(1, 2), make_rational(-1, 3))) == "1/2-1/3 i");
  CHECK_THROWS(parse_gaussian("1/0"));
  CHECK_THROWS(parse_gaussian("abc"));
}

TEST_CASE("kron examples") {
  CHECK(kron(Mat::identity(2), Mat::identity(2)) == Mat::identity(4));
  const Mat k = kron(Mat::unit(2, 1, 1), Mat::unit(2, 2, 2));
  CHECK(k.nnz() == 1);
  CHECK(k(1, 1) == GaussianRational(1));
  CHECK(kron(Mat::diag({1, -1}), Mat::identity(2)) == Mat::diag({1, 1, -1, -1}));
}

TEST_CASE("kron index formula and associativity") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Mat a = random_mat(rng, 2, 3), b = random_mat(rng, 3, 2), c = random_mat(rng, 2, 2);
    const Mat ab = kron(a, b);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t p = 0; p < 3; ++p)
          for (std::size_t q = 0; q < 2; ++q) CHECK(ab(i * 3 + p, j * 2 + q) == a(i, j) * b(p, q));
    CHECK(kron(a, kron(b, c)) == kron(kron(a, b), c));
  }
}

TEST_CASE("dagger examples") {
  CHECK(dagger(Mat::identity(4)) == Mat::identity(4));
  CHECK(dagger(Mat{{0, I}, {0, 0}}) == Mat{{0, 0}, {-I, 0}});
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const Mat a = random_mat(rng, 3, 4);
    CHECK(dagger(dagger(a)) == a);
    CHECK(dagger(a).rows() == 4);
  }
}

TEST_CASE("rref examples") {
  const auto [z, rz] = rref(Mat::zeros(3, 3));
  CHECK(rz == 0);
  CHECK(z == Mat::zeros(3, 3));
  const auto [e, re] = rref(Mat::identity(4));
  CHECK(re == 4);
  CHECK(e == Mat::identity(4));
  CHECK(rank(Mat{{1, I}, {-I, 1}}) == 1);
  const auto [r, rk] = rref(Mat{{2, 4}, {1, 3}});
  CHECK(rk == 2);
  CHECK(r == Mat::identity(2));
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Mat::identity(4)).dim() == 0);
  CHECK(nullspace(Mat::zeros(2, 2)).dim() == 2);
  const auto n = nullspace(Mat{{1, I}});
  REQUIRE(n.dim() == 1);
  // canonical representative of span{(-i, 1)} has leading 1
  const auto expected = ComplexSubspace::span(2, {make_sparse<GaussianRational>({{0, -I}, {1, 1}})});
  CHECK(subspace_equal(n, expected));
}

TEST_CASE("rank plus nullity equals columns") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + t % 5, c = 1 + (t * 7) % 6;
    Mat a = random_mat(rng, r, c, 40);
    if (t % 3 == 0 && r > 1) {
      for (std::size_t k = 0; k < c; ++k) a(r - 1, k) = a(0, k) * I;  // force a dependent row
    }
    const auto ns = nullspace(a);
    CHECK(rank(a) + ns.dim() == c);
    for (const auto& v : ns.basis()) {
      for (std::size_t row = 0; row < r; ++row) {
        GaussianRational s;
        for (const auto& [k, val] : v.entries) s += a(row, k) * val;
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("canonical form is independent of the spanning set and its order") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    std::vector<SparseVec<Rational>> gens;
    for (int k = 0; k < 4; ++k) {
      std::vector<std::pair<std::uint32_t, Rational>> raw;
      for (std::uint32_t c = 0; c < 7; ++c)
        if ((rng() % 3) == 0) raw.emplace_back(c, make_rational(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3));
      gens.push_back(make_sparse(std::move(raw)));
    }
    const auto s = SubspaceBasis::span(7, gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    // an independent spanning set: partial sums and rescalings of the originals
    std::vector<SparseVec<Rational>> other;
    SparseVec<Rational> acc;
    for (const auto& g : shuffled) {
      acc = sub_scaled(acc, Rational(-1), g);
      auto scaled = acc;
      scale_in_place(scaled, make_rational(3, 2));
      other.push_back(scaled);
    }
    CHECK(SubspaceBasis::span(7, shuffled) == s);
    CHECK(SubspaceBasis::span(7, other) == s);
  }
}

TEST_CASE("subspace equality, containment and intersection") {
  const auto x = SubspaceBasis::span(2, {make_sparse<Rational>({{0, 1}})});
  const auto y = SubspaceBasis::span(2, {make_sparse<Rational>({{1, 1}})});
  const auto full = SubspaceBasis::full(2);
  CHECK(subspace_equal(x, x));
  CHECK(subspace_intersect(x, y).dim() == 0);
  CHECK(subspace_equal(subspace_intersect(full, x), x));
  CHECK(subspace_contains(full, x));
  CHECK_FALSE(subspace_contains(x, y));
  const auto s3 = SubspaceBasis::full(3);
  CHECK_THROWS_AS(subspace_equal(x, s3), DimensionMismatch);
  CHECK_THROWS_AS(subspace_intersect(x, s3), DimensionMismatch);
  CHECK_THROWS_AS(subspace_contains(x, s3), DimensionMismatch);
}

TEST_CASE("echelon rows are reduced with unit pivots") {
  std::mt19937_64 rng(15);
  Echelon<Rational> e(9);
  for (int k = 0; k < 12; ++k) {
    std::vector<std::pair<std::uint32_t, Rational>> raw;
    for (std::uint32_t c = 0; c < 9; ++c)
      if (rng() % 2) raw.emplace_back(c, make_rational(static_cast<long>(rng() % 5) - 2, 1));
    e.insert(make_sparse(std::move(raw)));
  }
  const auto rows = e.canonical_rows();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    CHECK(rows[a].entries.front().second == 1);
    if (a > 0) CHECK(rows[a].lead() > rows[a - 1].lead());
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (a != b) CHECK(rows[b].find(rows[a].lead()) == nullptr);
    }
  }
}
