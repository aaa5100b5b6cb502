// The quantum symplectic enveloping algebra acting on V and V^{(x)n}.
//
// Conventions (type C_m, long node at i = m):
//   * simple roots alpha_i = eps_i - eps_{i+1} (i < m), alpha_m = 2 eps_m;
//   * q_i = q for short nodes, q^2 for the long node;
//   * k~_i = k_i for i < m and k_m^2 for i = m;
//   * coproduct Delta(e_i) = e_i (x) 1 + k~_i (x) e_i,
//               Delta(f_i) = 1 (x) f_i + f_i (x) k~_i^{-1},
//               Delta(k_i) = k_i (x) k_i,
// so the n-fold action of e_i is sum_k k~^(k-1 factors) (x) e_i (x) 1...,
// and of f_i is sum_k 1... (x) f_i (x) k~^{-1} on the remaining factors.
//
// The basis vector v_j has weight eps_j for j <= m and -eps_{j'} for j > m;
// k_i acts on a weight-mu vector by q^{<mu, alpha_i^vee>}.

#pragma once

#include "qsw/check.hpp"
#include "qsw/combin/tableaux.hpp"
#include "qsw/scalars/qpoly.hpp"
#include "qsw/tensorspace/operators.hpp"

#include <map>
#include <vector>

namespace qsw {

enum class GenKind { kE, kF, kK, kKinv };

struct Generator {
  GenKind kind;
  int i = 1;  // 1 <= i <= m
};

/// Weight in the epsilon-basis, length m.
using Weight = std::vector<int>;

/// Cartan matrix entry a_{i,j} = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i).
int cartan_entry(int i, int j, int m);

/// Node length of index i.
NodeLength node_of(int i, int m);

/// Coroot pairing <mu, alpha_i^vee>: mu_i - mu_{i+1} for i < m, mu_m at the
/// long node.
int coroot_pairing(const Weight& mu, int i, int m);

/// The action of a generator on V (2m x 2m).
SparseMat<Laurent> generator_matrix(Generator g, int m);

/// k~_i^{+-1} on V.
SparseMat<Laurent> ktilde_matrix(int i, int m, bool inverse);

/// Coproduct-expanded action on V^{(x)n}.
SparseMat<Laurent> tensor_generator(Generator g, int m, int n);

/// Divided power e_i^{(a)} = e_i^a / [a]_i! (or f_i^{(a)}) on V^{(x)n}.
/// The exact division is an integrality assertion: failure throws.
SparseMat<Laurent> divided_power(int i, int a, int m, int n,
                                 GenKind kind = GenKind::kE);

/// Weight of the flat basis vector with the given index.
Weight weight_of_basis(std::int64_t k, int m, int n);

/// All weights occurring in V^{(x)n} mapped to their (sorted) basis indices.
std::map<Weight, std::vector<std::int64_t>> weight_table(int m, int n);

/// The 0/1 diagonal projector onto the mu-weight space of V^{(x)n}.
SparseMat<Laurent> weight_projector(const Weight& mu, int m, int n);

/// The quantum binomial bracket: a diagonal operator acting on a weight-mu
/// vector by prod_{s=1}^t (q_i^{h+c-s+1} - q_i^{-h-c+s-1}) / (q_i^s - q_i^{-s})
/// with h = <mu, alpha_i^vee>; the scalar equals the quantum binomial
/// [h+c choose t] in base q_i and is always a Laurent polynomial.
SparseMat<Laurent> quantum_binomial_bracket(int i, int c, int t, int m, int n);

/// The scalar of the bracket on a single weight (exposed for the oracle
/// tests): [h+c choose t] in base q_i.
Laurent bracket_scalar(int h, int c, int t, NodeLength len);

/// The idempotent projector onto the mu = lambda weight space realized as a
/// product of quantum binomial brackets:
///   prod_{i<m} [K_i; -hl_i-1 / 2n][K_i; -hl_i+2n / 2n]
///   * [K_m; -hl_m-1 / 4n][K_m; -hl_m+4n / 4n]
/// with hl_i = <lambda, alpha_i^vee>.  Tests assert equality with
/// weight_projector(lambda).
SparseMat<Laurent> lusztig_projector(const Weight& lambda, int m, int n);

}  // namespace qsw
