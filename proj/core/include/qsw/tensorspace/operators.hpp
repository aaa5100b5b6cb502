// The explicit braid/tangle operators on V (x) V and their embeddings into
// V^{(x)n}:
//
//   beta  = sum_i (q^2 E_ii (x) E_ii + E_{i,i'} (x) E_{i',i})
//         + q sum_{i != j, j'} E_{i,j} (x) E_{j,i}
//         + (q^2-1) sum_{j < i} (E_ii (x) E_jj - q^{rho_i-rho_j} eps_i eps_j E_{i,j'} (x) E_{i',j})
//   gamma = sum_{i,j} q^{rho_i-rho_j} eps_i eps_j E_{i,j'} (x) E_{i',j}
//
// and their bar-twisted companions (the generic R-matrix normalization)
//
//   beta'  = bar(q beta^{-1}),  gamma' = bar(gamma)
//
// expanded explicitly, together with the Hecke-type operator beta^ that
// forgets the symplectic pairing.  All are exact Laurent matrices in the
// simple-tensor basis, with (E_{i,j} (x) E_{k,l})(v_a (x) v_b) =
// delta_{j,a} delta_{l,b} v_i (x) v_k.

#pragma once

#include "qsw/check.hpp"
#include "qsw/combin/permutation.hpp"
#include "qsw/scalars/qpoly.hpp"
#include "qsw/tensorspace/sparsemat.hpp"
#include "qsw/tensorspace/space.hpp"

#include <string>

namespace qsw {

SparseMat<Laurent> beta(int m);
SparseMat<Laurent> gamma_op(int m);
SparseMat<Laurent> beta_prime(int m);
SparseMat<Laurent> gamma_prime(int m);

/// The Hecke R-matrix (no symplectic terms):
///   beta^ = q sum_i E_ii (x) E_ii + sum_{i != j} E_{i,j} (x) E_{j,i}
///         + (q-q^{-1}) sum_{i<j} E_ii (x) E_jj.
SparseMat<Laurent> hecke_beta_hat(int m);

/// id^{(x)(pos-1)} (x) op2 (x) id^{(x)(n-pos-1)} for an operator on V (x) V.
SparseMat<Laurent> embed_at(const SparseMat<Laurent>& op2, int pos, int m, int n);

/// Identity on V^{(x)n} in Laurent mode.
SparseMat<Laurent> identity_laurent(int m, int n);

/// The place-permutation action of w: v_i |-> v_{iw} (a 0/1 matrix).
SparseMat<Laurent> place_action(const Permutation& w, int m);

/// Product of embedded beta' factors along the lexicographically smallest
/// reduced word of w, composed left to right (the word action of T_w).
SparseMat<Laurent> braid_word_action(const Permutation& w, int m);

/// Same with beta^ factors (the word action of T^_w).
SparseMat<Laurent> hecke_word_action(const Permutation& w, int m);

/// Verifies beta' - (beta')^{-1} = (q - q^{-1})(id - gamma'), inversion-free:
/// checks beta' * (beta' - (q-q^{-1})(id - gamma')) = id entry by entry.
CheckResult relation_bg_check(int m);

/// Same check against an arbitrary candidate for beta' (negative controls).
CheckResult relation_bg_check_on(const SparseMat<Laurent>& bp, int m,
                                 const std::string& name);

/// For every strictly decreasing pair-free multi-index i and every w in S_n,
/// v_i T_w = v_{iw}; for every merely pair-free i, v_i T_w = v_i T^_w.
/// Requires m >= n so that such indices exist.
CheckResult pairfree_compatibility_check(int m, int n);

}  // namespace qsw
