#include "pst/op.hpp"

#include "pst/error.hpp"

namespace pst {

std::pair<int, int> TensorIndex::flat() const {
  if (!valid()) throw std::out_of_range("tensor index out of range: " + to_string(*this));
  return {((k - 1) * 2 + i - 1) * 4 + r, ((l - 1) * 2 + j - 1) * 4 + s};
}

TensorIndex TensorIndex::from_flat(int row, int col) {
  if (row < 1 || row > 32 || col < 1 || col > 32) throw std::out_of_range("flat index out of range");
  TensorIndex t;
  t.r = (row - 1) % 4 + 1;
  t.i = ((row - 1) / 4) % 2 + 1;
  t.k = (row - 1) / 8 + 1;
  t.s = (col - 1) % 4 + 1;
  t.j = ((col - 1) / 4) % 2 + 1;
  t.l = (col - 1) / 8 + 1;
  return t;
}

bool TensorIndex::valid() const {
  auto in = [](int v, int hi) { return v >= 1 && v <= hi; };
  return in(k, 4) && in(l, 4) && in(i, 2) && in(j, 2) && in(r, 4) && in(s, 4);
}

std::string to_string(const TensorIndex& t) {
  return "(" + std::to_string(t.k) + "," + std::to_string(t.l) + "|" + std::to_string(t.i) + "," +
         std::to_string(t.j) + "|" + std::to_string(t.r) + "," + std::to_string(t.s) + ")";
}

Op::Op(Mat m) : m_(std::move(m)) {
  if (m_.rows() != kHilbertDim || m_.cols() != kHilbertDim) {
    throw ShapeError("operator on H must be 32x32, got " + std::to_string(m_.rows()) + "x" +
                     std::to_string(m_.cols()));
  }
}

const GaussianRational& Op::at(const TensorIndex& t) const {
  auto [r, c] = t.flat();
  return m_(r - 1, c - 1);
}

GaussianRational& Op::at(const TensorIndex& t) {
  auto [r, c] = t.flat();
  return m_(r - 1, c - 1);
}

bool Op::is_diagonal() const {
  for (std::size_t r = 0; r < kHilbertDim; ++r) {
    for (std::size_t c = 0; c < kHilbertDim; ++c) {
      if (r != c && !m_(r, c).is_zero()) return false;
    }
  }
  return true;
}

Op dagger(const Op& x) { return Op(dagger(x.mat())); }
Op commutator(const Op& a, const Op& b) { return a * b - b * a; }
Op anticommutator(const Op& a, const Op& b) { return a * b + b * a; }

Op embed(const Mat& a, int i, int j, const Mat& b) {
  if (a.rows() != 4 || a.cols() != 4 || b.rows() != 4 || b.cols() != 4) {
    throw ShapeError("embed expects 4x4 outer factors");
  }
  if (i < 1 || i > 2 || j < 1 || j > 2) throw ShapeError("sector index must be 1 or 2");
  return Op(kron(kron(a, Mat::unit(2, i, j)), b));
}

}  // namespace pst
