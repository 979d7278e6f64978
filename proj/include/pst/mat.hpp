#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "pst/gaussian.hpp"
#include "pst/subspace.hpp"

namespace pst {

/// Dense row-major matrix over the Gaussian rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major literal; every row must have the same length.
  Mat(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static Mat identity(std::size_t n);
  static Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  /// Matrix unit e_ij with 1-based (i, j).
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  static Mat diag(const std::vector<GaussianRational>& d);
  /// Block-diagonal matrix with the given square blocks.
  static Mat block_diag(const std::vector<Mat>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<GaussianRational>& data() const { return data_; }

  bool is_zero() const;
  std::size_t nnz() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const GaussianRational& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const GaussianRational& s) { return a *= s; }
  friend Mat operator*(const GaussianRational& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat operator-() const { return *this * GaussianRational(-1); }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

Mat kron(const Mat& a, const Mat& b);
Mat dagger(const Mat& a);
Mat transpose(const Mat& a);
Mat conjugate(const Mat& a);
Mat commutator(const Mat& a, const Mat& b);
Mat anticommutator(const Mat& a, const Mat& b);

/// Reduced row-echelon form over Q(i) and the rank.
std::pair<Mat, std::size_t> rref(const Mat& a);
std::size_t rank(const Mat& a);
/// Canonical basis of {x : a x = 0}.
ComplexSubspace nullspace(const Mat& a);

SparseVec<GaussianRational> sparse_row(const Mat& a, std::size_t r);

}  // namespace pst
