// Partitions and the index sets built from them: bounded-length partition
// families, the deflation labels (lambda, l), the dominance-style order used
// by the cellular structure, and the classical dimension counts (standard
// tableaux, symplectic Weyl dimension).

#pragma once

#include "qsw/scalars/laurent.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qsw {

/// A partition: weakly decreasing positive parts; empty = the zero partition.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;             // |lambda|
  int length() const;           // number of nonzero parts
  int part(int i) const;        // lambda_i, 1-based, 0 beyond the length
  Partition transpose() const;  // lambda^t

  bool operator==(const Partition& rhs) const { return parts == rhs.parts; }
  bool operator!=(const Partition& rhs) const { return !(*this == rhs); }

  std::string to_string() const;  // "[3,1,1]"; "[]" for the empty partition
};

/// All partitions of k into at most m parts, in reverse-lexicographic order
/// (largest first): Lambda^+(m, k).
std::vector<Partition> partitions_bounded(int k, int m);

/// The deflation index set Lambda_n: pairs (lambda, l) with 0 <= l <= n/2
/// and lambda a partition of n - 2l into at most m parts.  Enumerated with
/// l ascending and partitions in reverse-lexicographic order.
std::vector<std::pair<Partition, int>> lambda_n(int m, int n);

/// The comparison outcome of the cellular order.
enum class PrecOrder { kLess, kGreater, kEqual, kIncomparable };

/// The strict order on partitions used by the degree filtration:
///   * unequal sizes: lambda < mu exactly when |lambda| - |mu| is a positive
///     even number (larger partitions are SMALLER; this matches the
///     filtration by deflation degree, where higher deflation means later);
///   * equal sizes: decided by the first differing column length, shorter
///     column first: lambda < mu when lambda^t_s < mu^t_s at the first s
///     where the transposes differ.
/// Pairs whose sizes differ by an odd number are incomparable.
PrecOrder order_prec(const Partition& lambda, const Partition& mu);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
Integer std_count(const Partition& lambda);

/// Dimension of the irreducible highest-weight module of sp_{2m} with
/// highest weight lambda (Weyl dimension formula).  Requires length <= m.
Integer weyl_dim_sp(const Partition& lambda, int m);

/// Odd double factorial (2n-1)!! = 1*3*5*...*(2n-1).
Integer double_factorial_odd(int n);

/// Binomial coefficient as a big integer.
Integer binomial(int n, int k);

}  // namespace qsw
