#include "pst/mat.hpp"

#include <string>

#include "pst/error.hpp"

namespace pst {

Mat::Mat(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n) throw ShapeError("matrix unit index out of range");
  Mat m(n, n);
  m(i - 1, j - 1) = 1;
  return m;
}

Mat Mat::diag(const std::vector<GaussianRational>& d) {
  Mat m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

Mat Mat::block_diag(const std::vector<Mat>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw ShapeError("block_diag needs square blocks");
    n += b.rows();
  }
  Mat m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) m(off + r, off + c) = b(r, c);
    }
    off += b.rows();
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& z : data_) {
    if (!z.is_zero()) return false;
  }
  return true;
}

std::size_t Mat::nnz() const {
  std::size_t n = 0;
  for (const auto& z : data_) n += z.is_zero() ? 0 : 1;
  return n;
}

static void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_shape(*this, o, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  }
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_shape(*this, o, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  }
  return *this;
}

Mat& Mat::operator*=(const GaussianRational& s) {
  for (auto& z : data_) {
    if (!z.is_zero()) z *= s;
  }
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  Mat c(a.rows(), b.cols());
  // Operators here are sparse sign/unit patterns; skip zeros on both sides.
  std::vector<std::vector<std::size_t>> b_nz(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(k, j).is_zero()) b_nz[k].push_back(j);
    }
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j : b_nz[k]) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          if (!b(p, q).is_zero()) c(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  }
  return t;
}

Mat conjugate(const Mat& a) {
  Mat t(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(r, c) = a(r, c).conj();
  }
  return t;
}

Mat dagger(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c).conj();
  }
  return t;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }
Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }

SparseVec<GaussianRational> sparse_row(const Mat& a, std::size_t r) {
  SparseVec<GaussianRational> v;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!a(r, c).is_zero()) v.entries.emplace_back(static_cast<std::uint32_t>(c), a(r, c));
  }
  return v;
}

static Echelon<GaussianRational> row_echelon(const Mat& a) {
  Echelon<GaussianRational> e(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) e.insert(sparse_row(a, r));
  return e;
}

std::pair<Mat, std::size_t> rref(const Mat& a) {
  auto e = row_echelon(a);
  Mat out(a.rows(), a.cols());
  auto rows = e.canonical_rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, v] : rows[r].entries) out(r, c) = v;
  }
  return {out, rows.size()};
}

std::size_t rank(const Mat& a) { return row_echelon(a).rank(); }

ComplexSubspace nullspace(const Mat& a) { return row_echelon(a).kernel(); }

}  // namespace pst
