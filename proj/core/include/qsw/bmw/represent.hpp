// The specialized BMW algebra B_n(-q^{2m+1}, q) acting on V^{(x)n},
// V = K^{2m}: T_i acts by the embedded braid operator beta'_i and E_i by the
// embedded contraction operator gamma'_i.  This file houses the relation
// suite for the defining presentation, the anti-involution/transpose
// compatibility check, ranks of the Enyang image matrices, and structure
// constants read off the faithful m = n representation.

#pragma once

#include "qsw/bmw/enyang.hpp"
#include "qsw/check.hpp"
#include "qsw/scalars/primefield.hpp"
#include "qsw/tensorspace/operators.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace qsw {

/// The embedded braid generator: id^{(x)(i-1)} (x) beta' (x) id^{(x)(n-i-1)}.
SparseMat<Laurent> braid_operator(int i, int m, int n);

/// The embedded contraction generator, gamma' at position i.
SparseMat<Laurent> contraction_operator(int i, int m, int n);

/// The representing matrix of a word: the product of its letter matrices in
/// word order (empty word = identity).
SparseMat<Laurent> represent(const BmwWord& word, int m);

/// All (2n-1)!! Enyang image matrices at (m, n), in enyang_indices order.
std::vector<SparseMat<Laurent>> enyang_matrices(int m, int n);

/// Verifies the defining relations on the embedded operators with
/// r = -q^{2m+1}, z = q - q^{-1}, x = 1 - sum_{i=-m}^{m} q^{2i}: one result
/// per relation family,
///   (1) T_i^2 - 1 = z(T_i - T_i E_i), plus the two-site inverse form
///       beta'(beta' - z(1 - gamma')) = id;
///   (2) E_i^2 = x E_i;
///   (3) braid relations;  (4) distant generators commute;
///   (5) E_i E_{i+-1} E_i = E_i;
///   (6) T_i T_{i+1} E_i = E_{i+1} E_i and T_{i+1} T_i E_{i+1} = E_i E_{i+1};
///   (7) E_i T_i = T_i E_i = r^{-1} E_i;
///   (8) E_i T_{i+-1} E_i = r E_i.
/// All residuals must vanish as exact Laurent matrices; families that need
/// adjacent pairs are vacuously true at n = 2.
std::vector<CheckResult> relation_suite(int m, int n);

/// The same suite against arbitrary two-site operators in place of beta' and
/// gamma' (negative controls).
std::vector<CheckResult> relation_suite_on(const SparseMat<Laurent>& braid2,
                                           const SparseMat<Laurent>& cap2, int m,
                                           int n);

/// Anti-involution compatibility: represent(word)^T == represent(reversed
/// word) for every Enyang word at (m, n); equivalently the image of x* is
/// the transpose of the image of x.
CheckResult star_symmetry_check(int m, int n);

/// Rank over Q(q) of the vectorized Enyang image matrices (full rank
/// (2n-1)!! exactly when m >= n).
std::size_t enyang_image_rank_exact(int m, int n);

/// The same rank after evaluating q at a sampled point of a large prime
/// field; a full-rank answer certifies full exact rank (evaluation can only
/// drop rank).
std::size_t enyang_image_rank_modp(int m, int n, std::uint64_t seed);

/// The multiplication table of the Enyang basis: coeff[a][b][k] is the
/// coefficient of basis element k in the product (element a)(element b).
struct MultiplicationTable {
  int n = 1;
  std::vector<EnyangIndex> labels;
  std::vector<std::vector<std::vector<Laurent>>> coeff;
};

/// Structure constants over Z[q,q^-1], read off the faithful m = n
/// representation: each product is expanded against the stacked basis
/// matrices, the rational-function solution is asserted to simplify to
/// Laurent polynomials, and the expansion is re-verified entrywise.  Linear
/// dependence of the basis matrices is a hard failure (it would contradict
/// faithfulness).  Cost guard: n <= 3.
MultiplicationTable structure_constants(int n, std::uint64_t seed = 1);

/// Prime-field structure constants (the mode that makes n = 4 affordable).
/// If `pairs` is nonempty only those (a, b) products are computed.
struct FpMultiplicationTable {
  int n = 1;
  EvalPoint point;
  std::vector<EnyangIndex> labels;
  std::map<std::pair<int, int>, std::vector<Fp>> coeff;
};

FpMultiplicationTable structure_constants_modp(
    int n, std::uint64_t seed,
    const std::vector<std::pair<int, int>>& pairs = {});

}  // namespace qsw
