// Sparse square matrices over an exact scalar ring, in the column
// convention: entry (r, c) is the coefficient of v_r in the image of v_c,
// so operator composition is the usual matrix product.  The right-action
// convention downstream (row vectors acted on from the right) is realized
// by multiplying matrices left to right in word order.
//
// Canonical form: no explicit zeros, entries ordered by (row, col), so
// operator== is equality of operators.

#pragma once

#include "qsw/scalars/linalg.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qsw {

template <class K>
class SparseMat {
 public:
  using Index = std::int64_t;
  using EntryMap = std::map<std::pair<Index, Index>, K>;

  SparseMat() : dim_(0) {}
  explicit SparseMat(Index dim) : dim_(dim) {}

  static SparseMat identity(Index dim, const K& one) {
    SparseMat out(dim);
    for (Index i = 0; i < dim; ++i) out.entries_.emplace(std::make_pair(i, i), one);
    return out;
  }

  Index dim() const { return dim_; }
  const EntryMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  K at(Index r, Index c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? K() : it->second;
  }

  void add(Index r, Index c, const K& v) {
    if (lin::entry_is_zero(v)) return;
    auto [it, fresh] = entries_.try_emplace({r, c}, v);
    if (!fresh) {
      it->second += v;
      if (lin::entry_is_zero(it->second)) entries_.erase(it);
    }
  }

  void set(Index r, Index c, K v) {
    if (lin::entry_is_zero(v)) {
      entries_.erase({r, c});
    } else {
      entries_[{r, c}] = std::move(v);
    }
  }

  SparseMat transpose() const {
    SparseMat out(dim_);
    for (const auto& [rc, v] : entries_) out.entries_[{rc.second, rc.first}] = v;
    return out;
  }

  SparseMat scaled(const K& c) const {
    SparseMat out(dim_);
    for (const auto& [rc, v] : entries_) {
      K w = c * v;
      if (!lin::entry_is_zero(w)) out.entries_.emplace(rc, std::move(w));
    }
    return out;
  }

  SparseMat operator-() const {
    SparseMat out(dim_);
    for (const auto& [rc, v] : entries_) out.entries_.emplace(rc, -v);
    return out;
  }

  friend SparseMat operator+(SparseMat a, const SparseMat& b) {
    a.check_dim(b);
    for (const auto& [rc, v] : b.entries_) a.add(rc.first, rc.second, v);
    return a;
  }

  friend SparseMat operator-(SparseMat a, const SparseMat& b) {
    a.check_dim(b);
    for (const auto& [rc, v] : b.entries_) a.add(rc.first, rc.second, -v);
    return a;
  }

  friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
    a.check_dim(b);
    SparseMat out(a.dim_);
    // Row-sliced accumulation: for every a(r,k), walk row k of b.
    auto row_begin = [&](const SparseMat& mat, Index row) {
      return mat.entries_.lower_bound({row, std::numeric_limits<Index>::min()});
    };
    for (const auto& [rk, va] : a.entries_) {
      const auto [r, k] = rk;
      for (auto it = row_begin(b, k); it != b.entries_.end() && it->first.first == k;
           ++it) {
        out.add(r, it->first.second, va * it->second);
      }
    }
    return out;
  }

  bool operator==(const SparseMat& rhs) const {
    return dim_ == rhs.dim_ && entries_ == rhs.entries_;
  }
  bool operator!=(const SparseMat& rhs) const { return !(*this == rhs); }

  /// Entrywise image under fn (which may change the scalar type); fn must
  /// map zero to zero.
  template <class K2, class Fn>
  SparseMat<K2> map_entries(Fn&& fn) const {
    SparseMat<K2> out(dim_);
    for (const auto& [rc, v] : entries_) {
      K2 w = fn(v);
      if (!lin::entry_is_zero(w)) out.set(rc.first, rc.second, std::move(w));
    }
    return out;
  }

  /// Row-major flattening (index r*dim + c) as a sparse vector; this is the
  /// canonical vectorization used by all span computations.
  lin::SparseVec<K> vectorize() const {
    lin::SparseVec<K> out;
    out.reserve(entries_.size());
    for (const auto& [rc, v] : entries_) {
      out.emplace_back(static_cast<std::uint64_t>(rc.first) *
                           static_cast<std::uint64_t>(dim_) +
                       static_cast<std::uint64_t>(rc.second),
                       v);
    }
    return out;
  }

 private:
  void check_dim(const SparseMat& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  Index dim_;
  EntryMap entries_;
};

/// Kronecker product on tensor factors: (a (x) b)(v_i (x) v_j) has
/// block index i*b.dim + j.
template <class K>
SparseMat<K> kronecker(const SparseMat<K>& a, const SparseMat<K>& b) {
  SparseMat<K> out(a.dim() * b.dim());
  for (const auto& [rc_a, va] : a.entries()) {
    for (const auto& [rc_b, vb] : b.entries()) {
      out.set(rc_a.first * b.dim() + rc_b.first, rc_a.second * b.dim() + rc_b.second,
              va * vb);
    }
  }
  return out;
}

/// The commutator a b - b a.
template <class K>
SparseMat<K> commutator(const SparseMat<K>& a, const SparseMat<K>& b) {
  return a * b - b * a;
}

}  // namespace qsw
