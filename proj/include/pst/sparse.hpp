#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "pst/gaussian.hpp"

namespace pst {

/// Sparse vector: entries sorted by index, no stored zeros.
template <class F>
struct SparseVec {
  std::vector<std::pair<std::uint32_t, F>> entries;

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }
  std::uint32_t lead() const { return entries.front().first; }

  /// Value at `index`, or nullptr when the entry is zero.
  const F* find(std::uint32_t index) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), index,
                               [](const auto& e, std::uint32_t k) { return e.first < k; });
    if (it == entries.end() || it->first != index) return nullptr;
    return &it->second;
  }

  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries == b.entries; }
};

/// Builds a sparse vector from unsorted (index, value) pairs, summing duplicates.
template <class F>
SparseVec<F> make_sparse(std::vector<std::pair<std::uint32_t, F>> raw) {
  std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  for (auto& [k, v] : raw) {
    if (!out.entries.empty() && out.entries.back().first == k) {
      out.entries.back().second += v;
    } else {
      out.entries.emplace_back(k, std::move(v));
    }
  }
  std::erase_if(out.entries, [](const auto& e) { return is_zero(e.second); });
  return out;
}

/// Returns a - factor * b.
template <class F>
SparseVec<F> sub_scaled(const SparseVec<F>& a, const F& factor, const SparseVec<F>& b) {
  SparseVec<F> out;
  out.entries.reserve(a.entries.size() + b.entries.size());
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
      out.entries.push_back(*ia++);
    } else if (ia == a.entries.end() || ib->first < ia->first) {
      F v = factor * ib->second;
      out.entries.emplace_back(ib->first, -v);
      ++ib;
    } else {
      F v = factor * ib->second;
      F w = ia->second - v;
      if (!is_zero(w)) out.entries.emplace_back(ia->first, std::move(w));
      ++ia;
      ++ib;
    }
  }
  return out;
}

template <class F>
void scale_in_place(SparseVec<F>& v, const F& factor) {
  for (auto& e : v.entries) e.second *= factor;
}

}  // namespace pst
