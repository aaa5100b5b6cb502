// Quantum-group layer: q-combinatorics, generator matrices, the weight
// grading, divided powers, and the two projector constructions.

#include "doctest.h"

#include "qsw/qaction/generators.hpp"
#include "qsw/scalars/qpoly.hpp"

#include <stdexcept>

using namespace qsw;

namespace {
const Laurent q = Laurent::q();
const Laurent qi = Laurent::q(-1);

SparseMat<Laurent> gen(GenKind kind, int i, int m, int n) {
  return tensor_generator(Generator{kind, i}, m, n);
}
}  // namespace

TEST_CASE("Quantum integers, factorials, binomials") {
  CHECK(quantum_integer(0) == Laurent());
  CHECK(quantum_integer(1) == Laurent(1));
  CHECK(quantum_integer(2) == q + qi);
  CHECK(quantum_integer(3) == Laurent::q(2) + Laurent(1) + Laurent::q(-2));
  CHECK(quantum_integer(-3) == -quantum_integer(3));
  CHECK(quantum_integer(2, NodeLength::kLong) ==
        Laurent::q(2) + Laurent::q(-2));

  CHECK(quantum_factorial(0) == Laurent(1));
  CHECK(quantum_factorial(2) == q + qi);
  CHECK(quantum_factorial(3) == (q + qi) * quantum_integer(3));

  CHECK(quantum_binomial(4, 0) == Laurent(1));
  CHECK(quantum_binomial(4, 1) == quantum_integer(4));
  CHECK(quantum_binomial(4, 2) == Laurent::q(4) + Laurent::q(2) + Laurent(2) +
                                      Laurent::q(-2) + Laurent::q(-4));
  CHECK(quantum_binomial(2, 3) == Laurent());   // 0 <= a < t vanishes
  CHECK(quantum_binomial(-1, 2) == Laurent(1));  // [-1][-2]/[2]! = 1
  CHECK(quantum_binomial(-1, 1) == Laurent(-1));

  // Specialization constants.
  CHECK(bmw_z() == q - qi);
  CHECK(bmw_x(1) == -Laurent::q(2) - Laurent::q(-2));
  CHECK(bmw_r(1) == Laurent::monomial(3, Rational(-1)));
  for (int m = 1; m <= 4; ++m) {
    CHECK(bmw_ring_relation_residual(m).is_zero());
  }
}

TEST_CASE("Cartan data of type C") {
  // C_2: alpha_1 short, alpha_2 long.
  CHECK(cartan_entry(1, 1, 2) == 2);
  CHECK(cartan_entry(1, 2, 2) == -2);
  CHECK(cartan_entry(2, 1, 2) == -1);
  CHECK(cartan_entry(2, 2, 2) == 2);
  CHECK(node_of(1, 2) == NodeLength::kShort);
  CHECK(node_of(2, 2) == NodeLength::kLong);
  CHECK(node_of(1, 1) == NodeLength::kLong);  // C_1 = A_1 with the long root

  // Coroot pairings read off the epsilon coordinates.
  CHECK(coroot_pairing({3, 1}, 1, 2) == 2);  // mu_1 - mu_2
  CHECK(coroot_pairing({3, 1}, 2, 2) == 1);  // mu_m
}

TEST_CASE("Weight grading of the tensor space") {
  // Single site, m = 2: v_1 has weight eps_1, v_4 = v_1' has -eps_1.
  CHECK(weight_of_basis(0, 2, 1) == Weight{1, 0});
  CHECK(weight_of_basis(3, 2, 1) == Weight{-1, 0});

  const auto table = weight_table(1, 2);
  REQUIRE(table.size() == 3);
  CHECK(table.at({2}).size() == 1);
  CHECK(table.at({0}).size() == 2);
  CHECK(table.at({-2}).size() == 1);

  // e_i shifts weights by alpha_i: nonzero entries connect mu -> mu + alpha_i.
  for (int m : {1, 2}) {
    const int n = 2;
    for (int i = 1; i <= m; ++i) {
      Weight alpha(m, 0);
      alpha[i - 1] = i == m ? 2 : 1;
      if (i < m) alpha[i] = -1;
      const auto e = gen(GenKind::kE, i, m, n);
      for (const auto& [rc, v] : e.entries()) {
        Weight from = weight_of_basis(rc.second, m, n);
        const Weight to = weight_of_basis(rc.first, m, n);
        for (int s = 0; s < m; ++s) from[s] += alpha[s];
        CHECK(from == to);
      }
    }
  }
}

TEST_CASE("k e k^-1 = q^{cartan} e on tensor powers") {
  for (int m : {1, 2, 3}) {
    const int n = 2;
    for (int i = 1; i <= m; ++i) {
      const auto k = gen(GenKind::kK, i, m, n);
      const auto kinv = gen(GenKind::kKinv, i, m, n);
      CHECK(k * kinv == identity_laurent(m, n));
      for (int j = 1; j <= m; ++j) {
        const auto e = gen(GenKind::kE, j, m, n);
        const auto f = gen(GenKind::kF, j, m, n);
        const int a = cartan_entry(i, j, m);
        CHECK(k * e * kinv == e.scaled(Laurent::q(a)));
        CHECK(k * f * kinv == f.scaled(Laurent::q(-a)));
      }
    }
  }
}

TEST_CASE("[e_i, f_j] is the balanced Cartan integer") {
  for (int m : {1, 2}) {
    const int n = m == 1 ? 3 : 2;
    const auto table = weight_table(m, n);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        const auto lhs = commutator(gen(GenKind::kE, i, m, n),
                                    gen(GenKind::kF, j, m, n));
        SparseMat<Laurent> rhs(space_dim(m, n));
        if (i == j) {
          for (const auto& [mu, idxs] : table) {
            const Laurent c =
                quantum_integer(coroot_pairing(mu, i, m), node_of(i, m));
            for (const auto k : idxs) rhs.set(k, k, c);
          }
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("Divided powers are integral and recombine") {
  const int m = 2, n = 3;
  for (int i = 1; i <= m; ++i) {
    for (int a = 1; a <= n; ++a) {
      // Construction itself asserts exact divisibility by [a]_i!.
      const auto ea = divided_power(i, a, m, n, GenKind::kE);
      const auto fa = divided_power(i, a, m, n, GenKind::kF);
      CHECK(ea.dim() == space_dim(m, n));
      CHECK(fa.dim() == space_dim(m, n));
    }
    const auto e = gen(GenKind::kE, i, m, n);
    CHECK(divided_power(i, 2, m, n, GenKind::kE)
              .scaled(quantum_factorial(2, node_of(i, m))) == e * e);
    CHECK(divided_power(i, 1, m, n, GenKind::kE) == e);
  }
}

TEST_CASE("Weight projectors resolve the identity") {
  for (auto [m, n] : {std::pair{1, 2}, std::pair{2, 2}}) {
    const auto table = weight_table(m, n);
    SparseMat<Laurent> total(space_dim(m, n));
    for (const auto& [mu, idxs] : table) {
      const auto p = weight_projector(mu, m, n);
      CHECK(p * p == p);
      CHECK(p.nnz() == idxs.size());
      total = total + p;
    }
    CHECK(total == identity_laurent(m, n));
  }
}

TEST_CASE("Quantum binomial brackets on the space") {
  // t = 0 gives the identity regardless of c.
  CHECK(quantum_binomial_bracket(1, 5, 0, 1, 2) == identity_laurent(1, 2));
  // bracket_scalar is the shifted balanced binomial.
  CHECK(bracket_scalar(0, 0, 1, NodeLength::kShort) == Laurent());
  CHECK(bracket_scalar(1, -1, 1, NodeLength::kShort) == Laurent());
  CHECK(bracket_scalar(3, 0, 1, NodeLength::kShort) == quantum_integer(3));
  CHECK(bracket_scalar(1, 0, 1, NodeLength::kLong) ==
        quantum_integer(1, NodeLength::kLong));
}

TEST_CASE("Lusztig projectors coincide with weight projectors") {
  for (auto [m, n] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    for (const auto& [lam, idxs] : weight_table(m, n)) {
      CHECK(lusztig_projector(lam, m, n) == weight_projector(lam, m, n));
    }
  }
}
