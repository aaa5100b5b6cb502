// Exact linear algebra kernels: canonical reduced row-echelon spans, dense
// rank / solve / nullspace over a field, and fraction-free rank for Laurent
// matrices.
//
// Determinism contract: pivots are always the first nonzero entry with
// columns scanned left to right, so identical inputs produce identical
// output bases regardless of thread count.

#pragma once

#include "qsw/scalars/laurent.hpp"
#include "qsw/scalars/primefield.hpp"
#include "qsw/scalars/ratfunc.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qsw::lin {

// --- field helpers (overload set used by the templates below) -------------

inline bool entry_is_zero(const Laurent& x) { return x.is_zero(); }
inline bool entry_is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool entry_is_zero(const Fp& x) { return x.is_zero(); }

inline RatFunc make_zero(const RatFunc&) { return RatFunc(); }
inline RatFunc make_one(const RatFunc&) { return RatFunc(1); }
inline Fp make_zero(const Fp& like) { return Fp(0, like.p); }
inline Fp make_one(const Fp& like) { return Fp(1, like.p); }
inline Laurent make_zero(const Laurent&) { return Laurent(); }
inline Laurent make_one(const Laurent&) { return Laurent(1); }

inline RatFunc field_div(const RatFunc& a, const RatFunc& b) { return a / b; }
inline Fp field_div(const Fp& a, const Fp& b) { return a / b; }

// --- sparse vectors --------------------------------------------------------

/// Sparse vector: (index, value) pairs sorted by index, no zero values.
template <class F>
using SparseVec = std::vector<std::pair<std::uint64_t, F>>;

/// dst <- dst + c * src, merging sorted supports and dropping zeros.
template <class F>
SparseVec<F> axpy(const SparseVec<F>& dst, const F& c, const SparseVec<F>& src) {
  SparseVec<F> out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() || b != src.end()) {
    if (b == src.end() || (a != dst.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == dst.end() || b->first < a->first) {
      F v = c * b->second;
      if (!entry_is_zero(v)) out.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      F v = a->second + c * b->second;
      if (!entry_is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

/// Canonical reduced row-echelon span of sparse vectors over a field.
/// Rows are keyed by pivot index; every stored row has pivot coefficient 1
/// and is reduced against every other pivot, so the row set is the unique
/// RREF basis of the span.
template <class F>
class RowSpace {
 public:
  /// Reduces v against the current rows; empty result means v is in the span.
  SparseVec<F> residual(SparseVec<F> v) const {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) break;
      F c = -v.front().second;
      v = axpy(v, c, it->second);
    }
    return v;
  }

  bool contains(const SparseVec<F>& v) const { return residual(v).empty(); }

  /// Inserts v; returns true when it enlarged the span.
  bool insert(SparseVec<F> v) {
    v = residual(std::move(v));
    if (v.empty()) return false;
    // Normalize the pivot to 1.
    const F lead = v.front().second;
    if (!(lead == make_one(lead))) {
      for (auto& [i, x] : v) x = field_div(x, lead);
    }
    const std::uint64_t piv = v.front().first;
    // Back-substitute into the existing rows to keep the basis reduced.
    for (auto& [p, row] : rows_) {
      auto hit = std::lower_bound(
          row.begin(), row.end(), piv,
          [](const auto& e, std::uint64_t k) { return e.first < k; });
      if (hit != row.end() && hit->first == piv) {
        F c = -hit->second;
        row = axpy(row, c, v);
      }
    }
    rows_.emplace(piv, std::move(v));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }
  const std::map<std::uint64_t, SparseVec<F>>& rows() const { return rows_; }

 private:
  std::map<std::uint64_t, SparseVec<F>> rows_;
};

// --- dense kernels ---------------------------------------------------------

template <class F>
using DenseMatrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form; returns the pivot columns in order.
template <class F>
std::vector<std::size_t> rref_in_place(DenseMatrix<F>& mat) {
  std::vector<std::size_t> pivots;
  if (mat.empty()) return pivots;
  const std::size_t rows = mat.size(), cols = mat[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && entry_is_zero(mat[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(mat[r], mat[sel]);
    const F piv = mat[r][c];
    for (std::size_t j = c; j < cols; ++j) mat[r][j] = field_div(mat[r][j], piv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || entry_is_zero(mat[i][c])) continue;
      const F f = mat[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        mat[i][j] = mat[i][j] - f * mat[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t dense_rank(DenseMatrix<F> mat) {
  return rref_in_place(mat).size();
}

/// Canonical nullspace basis: one vector per free column (ascending), with
/// value 1 at the free column and the negated reduced column elsewhere.
template <class F>
std::vector<std::vector<F>> dense_nullspace(DenseMatrix<F> mat, const F& like) {
  const std::size_t cols = mat.empty() ? 0 : mat[0].size();
  const auto pivots = rref_in_place(mat);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(cols, make_zero(like));
    v[f] = make_one(like);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = -mat[r][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One exact solution of A x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> dense_solve(DenseMatrix<F> a, const std::vector<F>& b,
                                          const F& like) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  const auto pivots = rref_in_place(a);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<F> x(cols, make_zero(like));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

/// Fraction-free (Bareiss) rank for Laurent matrices: no field structure is
/// needed because every division is exact in Z[q, q^-1].
std::size_t laurent_rank_fraction_free(DenseMatrix<Laurent> mat);

}  // namespace qsw::lin
