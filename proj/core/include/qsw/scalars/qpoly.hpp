// Quantum integers, factorials, and the distinguished constants of the
// Birman-Murakami-Wenzl specialization.
//
// Two node lengths occur for the symplectic root system: short nodes use the
// base q, the long node uses q^2.  The balanced quantum integer is
//   [k]_{q_i} = (q_i^k - q_i^-k) / (q_i - q_i^-1) = q_i^{k-1} + ... + q_i^{1-k}.

#pragma once

#include "qsw/scalars/laurent.hpp"

namespace qsw {

enum class NodeLength { kShort, kLong };

/// Base exponent of the node: 1 for short nodes, 2 for the long node.
inline int node_base(NodeLength len) { return len == NodeLength::kShort ? 1 : 2; }

/// Balanced quantum integer [k] in base q (short) or q^2 (long).
/// Defined for all integers k; [-k] = -[k] and [0] = 0.
Laurent quantum_integer(int k, NodeLength len = NodeLength::kShort);

/// Quantum factorial [k]! = [k][k-1]...[1]; [0]! = 1.  Requires k >= 0.
Laurent quantum_factorial(int k, NodeLength len = NodeLength::kShort);

/// Quantum binomial [a choose t] = [a][a-1]...[a-t+1] / [t]! for integer a
/// (possibly negative) and t >= 0.  The division is exact in Q[q,q^-1].
Laurent quantum_binomial(int a, int t, NodeLength len = NodeLength::kShort);

/// The rank-m tangle-closure constant x_m = 1 - sum_{i=-m}^{m} q^{2i}.
/// x_0 = 0 and x_1 = -q^2 - q^-2.
Laurent bmw_x(int m);

/// The twist parameter r_m = -q^{2m+1} of the rank-m specialization, as the
/// pair (sign, exponent) folded into a Laurent monomial.
Laurent bmw_r(int m);

/// The generic loop parameter z = q - q^-1.
Laurent bmw_z();

/// Residual of the defining relation (1 - x) z + (r - r^-1) of the
/// three-parameter ground ring under the rank-m specialization; must vanish.
Laurent bmw_ring_relation_residual(int m);

}  // namespace qsw
