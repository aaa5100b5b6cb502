// Distinguished coset representatives for the two-row-type compositions
// nu_f = ((2^f), (n-2f)): the sets D_{nu_f}, D_f, the subset representatives
// d_J with their explicit reduced words, and the interleaving element d_0.
//
// D_{nu_f} consists of the d for which the canonical bitableau of shape
// nu_f, place-permuted by d, is row standard with increasing first column in
// the first component; these index one side of the diagram basis.

#pragma once

#include "qsw/combin/permutation.hpp"

#include <vector>

namespace qsw {

/// All strictly increasing k-subsets of {1,...,n}, lexicographic.
std::vector<std::vector<int>> increasing_subsets(int n, int k);

/// The explicit reduced word of d_J for an increasing 2f-subset
/// J = (i_1 < ... < i_{2f}) of {1..n}:
///   (s_{2f} s_{2f+1} ... s_{i_{2f}-1}) ... (s_1 s_2 ... s_{i_1 - 1}),
/// of length sum_t (i_t - t).
std::vector<int> d_J_word(const std::vector<int>& J);

/// The permutation d_J itself (in S_n).  Validates J.
Permutation d_J(int n, const std::vector<int>& J);

/// The explicit reduced word of the interleaving element d_0 in S_2f:
///   (s_{2f-2} s_{2f-1})(s_{2f-4} ... s_{2f-1}) ... (s_2 ... s_{2f-1}),
/// of length f(f-1).
std::vector<int> d_0_word(int f);

/// d_0 in S_n (n >= 2f): (a)d_0 = (a+1)/2 for odd a, 2f+1-a/2 for even a <= 2f.
Permutation d_0(int n, int f);

/// D_f = D_{nu_f} intersected with S_2f (inside S_n): the standard-pairing
/// permutations of {1..2f}.  Canonical order: lexicographic by image tuple.
std::vector<Permutation> D_f_reps(int n, int f);

/// All of D_{nu_f} via the factorization D_{nu_f} = union over J of D_f d_J,
/// enumerated J-lexicographically, then by D_f order.  Lengths are additive:
/// l(d1 d_J) = l(d1) + l(d_J).
std::vector<Permutation> coset_reps_D_nu(int f, int n);

/// Membership oracle straight from the definition (row-standard bitableau
/// with increasing first column); used to cross-check the factorization.
bool is_coset_rep_D_nu(int f, int n, const Permutation& d);

}  // namespace qsw
