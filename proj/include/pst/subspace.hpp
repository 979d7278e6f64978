#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pst/error.hpp"
#include "pst/sparse.hpp"

namespace pst {

template <class F>
class BasicSubspace;

/// Incrementally maintained reduced row-echelon form of a row space.
///
/// Every stored row has leading entry 1 at its pivot and zeros in all other
/// pivot columns. The RREF of a row space is unique, so the result does not
/// depend on insertion order.
template <class F>
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Inserts `v`; returns true when it was independent of the current rows.
  bool insert(const SparseVec<F>& v) {
    SparseVec<F> r = reduce(v);
    if (r.empty()) return false;
    const std::uint32_t pivot = r.lead();
    F inv = F(1) / r.entries.front().second;
    scale_in_place(r, inv);
    for (auto& row : rows_) {
      if (const F* c = row.find(pivot)) {
        F factor = *c;
        row = sub_scaled(row, factor, r);
      }
    }
    pivot_row_[pivot] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  /// `v` minus its projection onto the row space along pivot columns.
  SparseVec<F> reduce(const SparseVec<F>& v) const {
    check_dim(v);
    // Pivot rows are zero on every other pivot column, so the set of pivot
    // columns touched by `v` can only shrink during reduction.
    std::vector<std::pair<std::uint32_t, F>> hits;
    for (const auto& [k, val] : v.entries) {
      if (pivot_row_[k] >= 0) hits.emplace_back(k, val);
    }
    SparseVec<F> r = v;
    for (const auto& [k, val] : hits) r = sub_scaled(r, val, rows_[pivot_row_[k]]);
    return r;
  }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  /// Rows sorted by pivot column: the canonical basis.
  std::vector<SparseVec<F>> canonical_rows() const {
    std::vector<SparseVec<F>> out;
    out.reserve(rows_.size());
    for (std::size_t k = 0; k < dim_; ++k) {
      if (pivot_row_[k] >= 0) out.push_back(rows_[pivot_row_[k]]);
    }
    return out;
  }

  /// Basis of {x : r.x = 0 for every stored row r}, canonicalized.
  BasicSubspace<F> kernel() const;

 private:
  void check_dim(const SparseVec<F>& v) const {
    if (!v.empty() && v.entries.back().first >= dim_) {
      throw DimensionMismatch("vector index " + std::to_string(v.entries.back().first) +
                              " outside ambient dimension " + std::to_string(dim_));
    }
  }

  std::size_t dim_;
  std::vector<SparseVec<F>> rows_;
  std::vector<std::int32_t> pivot_row_;
};

/// A linear subspace stored by its canonical (RREF) basis.
template <class F>
class BasicSubspace {
 public:
  BasicSubspace() = default;

  static BasicSubspace span(std::size_t ambient, const std::vector<SparseVec<F>>& generators) {
    Echelon<F> e(ambient);
    for (const auto& g : generators) e.insert(g);
    return from_echelon(e);
  }

  static BasicSubspace from_echelon(const Echelon<F>& e) {
    BasicSubspace s;
    s.ambient_ = e.dim();
    s.basis_ = e.canonical_rows();
    return s;
  }

  static BasicSubspace zero(std::size_t ambient) {
    BasicSubspace s;
    s.ambient_ = ambient;
    return s;
  }

  static BasicSubspace full(std::size_t ambient) {
    BasicSubspace s;
    s.ambient_ = ambient;
    s.basis_.resize(ambient);
    for (std::size_t k = 0; k < ambient; ++k) s.basis_[k].entries.emplace_back(k, F(1));
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVec<F>>& basis() const { return basis_; }

  /// Echelon state seeded with the canonical basis (already reduced).
  Echelon<F> echelon() const {
    Echelon<F> e(ambient_);
    for (const auto& b : basis_) e.insert(b);
    return e;
  }

  bool contains_vector(const SparseVec<F>& v) const { return echelon().contains(v); }

  /// Linear equations cutting out this subspace: a basis of its annihilator
  /// under the bilinear pairing x.y = sum x_k y_k.
  std::vector<SparseVec<F>> equations() const { return echelon().kernel().basis(); }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVec<F>> basis_;
};

template <class F>
BasicSubspace<F> Echelon<F>::kernel() const {
  // Free column f contributes e_f - sum_p R[p][f] e_p.
  std::vector<std::vector<std::pair<std::uint32_t, F>>> raw(dim_);
  for (std::size_t f = 0; f < dim_; ++f) {
    if (pivot_row_[f] < 0) raw[f].emplace_back(static_cast<std::uint32_t>(f), F(1));
  }
  for (const auto& row : rows_) {
    const std::uint32_t p = row.lead();
    for (const auto& [k, val] : row.entries) {
      if (k != p) raw[k].emplace_back(p, -val);
    }
  }
  Echelon<F> out(dim_);
  for (std::size_t f = 0; f < dim_; ++f) {
    if (pivot_row_[f] < 0) out.insert(make_sparse(std::move(raw[f])));
  }
  return BasicSubspace<F>::from_echelon(out);
}

using SubspaceBasis = BasicSubspace<Rational>;
using ComplexSubspace = BasicSubspace<GaussianRational>;

/// Nullspace of the matrix whose rows are `rows`.
template <class F>
BasicSubspace<F> nullspace_of_rows(std::size_t dim, const std::vector<SparseVec<F>>& rows) {
  Echelon<F> e(dim);
  for (const auto& r : rows) e.insert(r);
  return e.kernel();
}

namespace detail {
template <class F>
void require_same_ambient(const BasicSubspace<F>& s, const BasicSubspace<F>& t) {
  if (s.ambient_dim() != t.ambient_dim()) {
    throw DimensionMismatch("subspaces live in ambient dimensions " + std::to_string(s.ambient_dim()) +
                            " and " + std::to_string(t.ambient_dim()));
  }
}
}  // namespace detail

template <class F>
bool subspace_equal(const BasicSubspace<F>& s, const BasicSubspace<F>& t) {
  detail::require_same_ambient(s, t);
  return s == t;
}

/// True when t is a subspace of s.
template <class F>
bool subspace_contains(const BasicSubspace<F>& s, const BasicSubspace<F>& t) {
  detail::require_same_ambient(s, t);
  if (t.dim() > s.dim()) return false;
  Echelon<F> e = s.echelon();
  for (const auto& v : t.basis()) {
    if (!e.contains(v)) return false;
  }
  return true;
}

template <class F>
BasicSubspace<F> subspace_intersect(const BasicSubspace<F>& s, const BasicSubspace<F>& t) {
  detail::require_same_ambient(s, t);
  std::vector<SparseVec<F>> rows = s.equations();
  std::vector<SparseVec<F>> more = t.equations();
  rows.insert(rows.end(), more.begin(), more.end());
  return nullspace_of_rows(s.ambient_dim(), rows);
}

}  // namespace pst
