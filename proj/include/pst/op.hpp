#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "pst/mat.hpp"

namespace pst {

/// Dimension of the finite Hilbert space H = F + F*.
inline constexpr std::size_t kHilbertDim = 32;

/// Index (k,l | i,j | r,s) of the matrix unit e_kl (x) e_ij (x) e_rs in
/// M4 (x) M2 (x) M4. All components are 1-based.
struct TensorIndex {
  int k = 1, l = 1;
  int i = 1, j = 1;
  int r = 1, s = 1;

  /// Flat 1-based (row, col) in 1..32: row = ((k-1)*2 + i-1)*4 + r.
  std::pair<int, int> flat() const;
  static TensorIndex from_flat(int row, int col);
  bool valid() const;

  friend bool operator==(const TensorIndex&, const TensorIndex&) = default;
  friend auto operator<=>(const TensorIndex&, const TensorIndex&) = default;
};

std::string to_string(const TensorIndex& t);

/// 0-based basis position of e_k (x) e_i (x) e_r.
constexpr std::size_t basis_position(int k, int i, int r) {
  return static_cast<std::size_t>(((k - 1) * 2 + (i - 1)) * 4 + (r - 1));
}

/// Element of End(H) as a 32x32 exact matrix.
class Op {
 public:
  Op() : m_(kHilbertDim, kHilbertDim) {}
  explicit Op(Mat m);

  static Op identity() { return Op(Mat::identity(kHilbertDim)); }
  static Op zero() { return Op(); }

  const Mat& mat() const { return m_; }

  /// 0-based flat access.
  GaussianRational& operator()(std::size_t r, std::size_t c) { return m_(r, c); }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  const GaussianRational& at(const TensorIndex& t) const;
  GaussianRational& at(const TensorIndex& t);

  bool is_zero() const { return m_.is_zero(); }
  bool is_diagonal() const;

  Op& operator+=(const Op& o) { m_ += o.m_; return *this; }
  Op& operator-=(const Op& o) { m_ -= o.m_; return *this; }
  Op& operator*=(const GaussianRational& s) { m_ *= s; return *this; }

  friend Op operator+(Op a, const Op& b) { return a += b; }
  friend Op operator-(Op a, const Op& b) { return a -= b; }
  friend Op operator*(Op a, const GaussianRational& s) { return a *= s; }
  friend Op operator*(const GaussianRational& s, Op a) { return a *= s; }
  friend Op operator*(const Op& a, const Op& b) { return Op(a.m_ * b.m_); }
  Op operator-() const { return Op(-m_); }

  friend bool operator==(const Op& a, const Op& b) { return a.m_ == b.m_; }

 private:
  Mat m_;
};

Op dagger(const Op& x);
Op commutator(const Op& a, const Op& b);
Op anticommutator(const Op& a, const Op& b);

/// a (x) e_ij (x) b for 4x4 a, b and sector indices i, j in {1, 2}.
Op embed(const Mat& a, int i, int j, const Mat& b);

}  // namespace pst
