#include "qsw/scalars/qpoly.hpp"

#include <stdexcept>

namespace qsw {

Laurent quantum_integer(int k, NodeLength len) {
  const int b = node_base(len);
  Laurent out;
  if (k == 0) return out;
  const int n = k > 0 ? k : -k;
  // [n] = q^{b(n-1)} + q^{b(n-3)} + ... + q^{-b(n-1)}
  for (int e = n - 1; e >= -(n - 1); e -= 2) out += Laurent::q(b * e);
  return k > 0 ? out : -out;
}

Laurent quantum_factorial(int k, NodeLength len) {
  if (k < 0) throw std::domain_error("quantum_factorial of negative integer");
  Laurent out(1);
  for (int j = 2; j <= k; ++j) out *= quantum_integer(j, len);
  return out;
}

Laurent quantum_binomial(int a, int t, NodeLength len) {
  if (t < 0) throw std::domain_error("quantum_binomial with negative t");
  Laurent num(1);
  for (int s = 0; s < t; ++s) {
    const Laurent factor = quantum_integer(a - s, len);
    if (factor.is_zero()) return {};
    num *= factor;
  }
  return num.div_exact(quantum_factorial(t, len));
}

Laurent bmw_x(int m) {
  if (m < 0) throw std::domain_error("bmw_x of negative rank");
  Laurent out(1);
  for (int i = -m; i <= m; ++i) out -= Laurent::q(2 * i);
  return out;
}

Laurent bmw_r(int m) { return Laurent::monomial(2 * m + 1, -1); }

Laurent bmw_z() { return Laurent::q(1) - Laurent::q(-1); }

Laurent bmw_ring_relation_residual(int m) {
  const Laurent r = bmw_r(m);
  const Laurent rinv = Laurent::monomial(-(2 * m + 1), -1);
  return (Laurent(1) - bmw_x(m)) * bmw_z() + (r - rinv);
}

}  // namespace qsw
