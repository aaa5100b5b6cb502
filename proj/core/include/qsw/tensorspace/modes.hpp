// Conversions of integral (Laurent-entried) operators into the two field
// modes used by rank computations: the exact field Q(q) and a prime field
// F_p under the evaluation q |-> c.

#pragma once

#include "qsw/scalars/primefield.hpp"
#include "qsw/scalars/ratfunc.hpp"
#include "qsw/tensorspace/sparsemat.hpp"

#include <vector>

namespace qsw {

inline SparseMat<RatFunc> ratfunc_matrix(const SparseMat<Laurent>& mat) {
  return mat.map_entries<RatFunc>([](const Laurent& v) { return RatFunc(v); });
}

inline SparseMat<Fp> fp_matrix(const SparseMat<Laurent>& mat, const EvalPoint& pt) {
  return mat.map_entries<Fp>([&](const Laurent& v) { return pt(v); });
}

inline std::vector<SparseMat<RatFunc>> ratfunc_matrices(
    const std::vector<SparseMat<Laurent>>& mats) {
  std::vector<SparseMat<RatFunc>> out;
  out.reserve(mats.size());
  for (const auto& mat : mats) out.push_back(ratfunc_matrix(mat));
  return out;
}

inline std::vector<SparseMat<Fp>> fp_matrices(
    const std::vector<SparseMat<Laurent>>& mats, const EvalPoint& pt) {
  std::vector<SparseMat<Fp>> out;
  out.reserve(mats.size());
  for (const auto& mat : mats) out.push_back(fp_matrix(mat, pt));
  return out;
}

/// Reads an entry of a prime-field matrix, materializing absent entries as
/// the zero of F_p (SparseMat::at would hand back a modulus-free
/// placeholder).
inline Fp fp_entry(const SparseMat<Fp>& mat, std::int64_t r, std::int64_t c,
                   const EvalPoint& pt) {
  const Fp v = mat.at(r, c);
  return v.p == 0 ? pt.zero() : v;
}

}  // namespace qsw
