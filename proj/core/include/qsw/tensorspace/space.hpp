// The tensor space V^{(x)n} for V of dimension 2m: basis bookkeeping between
// multi-indices in I(2m,n) and flat coordinates, plus the (rho, eps) data of
// the symplectic form.

#pragma once

#include "qsw/combin/permutation.hpp"

#include <cstdint>
#include <vector>

namespace qsw {

struct SpaceConfig {
  int m = 1;  // V has dimension 2m
  int n = 1;  // tensor degree
};

/// (2m)^n.
std::int64_t space_dim(int m, int n);

/// Mixed-radix bijection: index = sum_k (i_k - 1) (2m)^{n-k}; the first
/// entry is the most significant digit.
std::int64_t basis_index(const MultiIndex& idx, int m);

/// Inverse of basis_index.
MultiIndex basis_multiindex(std::int64_t k, int m, int n);

/// rho = (m, m-1, ..., 1, -1, ..., -m) and eps_i = sign(rho_i); 1-based.
struct RhoEps {
  explicit RhoEps(int m);
  int rho(int i) const { return rho_[i - 1]; }
  int eps(int i) const { return eps_[i - 1]; }

 private:
  std::vector<int> rho_;
  std::vector<int> eps_;
};

}  // namespace qsw
