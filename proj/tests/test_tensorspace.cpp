// Tensor-space layer: basis indexing, sparse matrices, the defining
// two-site operators and their relations, and word actions.

#include "doctest.h"

#include "qsw/scalars/laurent.hpp"
#include "qsw/tensorspace/modes.hpp"
#include "qsw/tensorspace/operators.hpp"
#include "qsw/tensorspace/space.hpp"
#include "qsw/tensorspace/sparsemat.hpp"

#include <stdexcept>

using namespace qsw;

namespace {
const Laurent q = Laurent::q();
const Laurent qi = Laurent::q(-1);

// The q -> 1 specialization, entry by entry (constants only afterwards).
SparseMat<Laurent> at_one(const SparseMat<Laurent>& mat) {
  return mat.map_entries<Laurent>(
      [](const Laurent& f) { return Laurent(f.at_one()); });
}
}  // namespace

TEST_CASE("Basis indexing is most-significant-first") {
  CHECK(space_dim(1, 2) == 4);
  CHECK(space_dim(2, 3) == 64);
  CHECK(space_dim(3, 1) == 6);

  // First entry is the most significant digit.
  CHECK(basis_index({1, 2}, 1) == 1);
  CHECK(basis_index({2, 1}, 1) == 2);
  CHECK(basis_index({2, 2}, 1) == 3);
  CHECK(basis_index({1, 1, 1}, 2) == 0);
  CHECK(basis_index({1, 1, 2}, 2) == 1);
  CHECK(basis_index({2, 1, 1}, 2) == 16);

  for (std::int64_t k = 0; k < space_dim(2, 3); ++k) {
    CHECK(basis_index(basis_multiindex(k, 2, 3), 2) == k);
  }
}

TEST_CASE("rho and eps tables") {
  const RhoEps re(2);
  CHECK(re.rho(1) == 2);
  CHECK(re.rho(2) == 1);
  CHECK(re.rho(3) == -1);
  CHECK(re.rho(4) == -2);
  CHECK(re.eps(1) == 1);
  CHECK(re.eps(2) == 1);
  CHECK(re.eps(3) == -1);
  CHECK(re.eps(4) == -1);
}

TEST_CASE("SparseMat canonical form and arithmetic") {
  SparseMat<Laurent> a(2);
  a.set(0, 1, q);
  a.set(0, 1, Laurent());  // setting zero erases
  CHECK(a.is_zero());

  a.set(0, 1, q);
  a.add(0, 1, -q);  // additive cancellation prunes
  CHECK(a.is_zero());
  CHECK(a.at(0, 1) == Laurent());  // absent entries read as ring zero

  a.set(0, 1, q);
  a.set(1, 0, qi);
  CHECK(a.nnz() == 2);
  CHECK(a.transpose().at(1, 0) == q);
  CHECK(a.scaled(q).at(0, 1) == Laurent::q(2));
  CHECK((-a).at(0, 1) == -q);

  const auto id = SparseMat<Laurent>::identity(2, Laurent(1));
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK(a + (-a) == SparseMat<Laurent>(2));
  CHECK(a - a == SparseMat<Laurent>(2));

  // (0 q; q^-1 0)^2 = id.
  CHECK(a * a == id);

  SparseMat<Laurent> b(3);
  CHECK_THROWS_AS(void(a * b), std::invalid_argument);

  // map_entries can change scalars; vectorize flattens row-major.
  const auto doubled =
      a.map_entries<Laurent>([](const Laurent& f) { return Laurent(2) * f; });
  CHECK(doubled.at(0, 1) == Laurent(2) * q);
  const auto vec = a.vectorize();
  REQUIRE(vec.size() == 2);
  CHECK(vec[0].first == 1);  // (0,1) -> 0*2+1
  CHECK(vec[1].first == 2);  // (1,0) -> 1*2+0
}

TEST_CASE("Kronecker block indexing matches the basis order") {
  SparseMat<Laurent> a(2), b(2);
  a.set(0, 1, q);   // v_2 -> q v_1 in factor one
  b.set(1, 0, qi);  // v_1 -> q^-1 v_2 in factor two
  const auto k = kronecker(a, b);
  CHECK(k.dim() == 4);
  // (v_2 (x) v_1) = index 1*2+0 = 2 maps to q q^-1 (v_1 (x) v_2) = index 1.
  CHECK(k.at(1, 2) == Laurent(1));
  CHECK(k.nnz() == 1);

  const auto idm = SparseMat<Laurent>::identity(2, Laurent(1));
  CHECK(commutator(kronecker(a, idm), kronecker(idm, b)).is_zero());
}

TEST_CASE("beta: eigenoperator structure on two sites") {
  const auto b1 = beta(1);
  // Repeated letters (a, a) are fixed with eigenvalue q^2.
  CHECK(b1.at(basis_index({1, 1}, 1), basis_index({1, 1}, 1)) == Laurent::q(2));
  CHECK(b1.at(basis_index({2, 2}, 1), basis_index({2, 2}, 1)) == Laurent::q(2));

  const auto b2 = beta(2);
  // Non-conjugate distinct letters swap with weight q, plus a diagonal
  // correction (q^2 - 1) on the descending side (first letter larger).
  const auto r12 = basis_index({1, 2}, 2);
  const auto r21 = basis_index({2, 1}, 2);
  CHECK(b2.at(r21, r12) == q);
  CHECK(b2.at(r12, r12) == Laurent());
  CHECK(b2.at(r12, r21) == q);
  CHECK(b2.at(r21, r21) == Laurent::q(2) - Laurent(1));
}

TEST_CASE("gamma: rank-one contraction structure") {
  const auto g1 = gamma_op(1);
  // Column (1, 1') at m = 1: sum_i q^{rho_i - rho_2} eps_i eps_2 v_i (x) v_i'.
  const auto c = basis_index({1, 2}, 1);
  CHECK(g1.at(basis_index({1, 2}, 1), c) == -Laurent::q(2));
  CHECK(g1.at(basis_index({2, 1}, 1), c) == Laurent(1));
  // Non-conjugate columns vanish.
  CHECK(g1.at(basis_index({1, 2}, 1), basis_index({1, 1}, 1)) == Laurent());

  // gamma is rank one: all nonzero columns are proportional; verify the
  // (2, 1) column is q^{rho_2 - rho_1} eps_2 eps_1 = -q^-2 times the (1, 2)
  // column... realized by comparing cross-scaled columns.
  const auto c2 = basis_index({2, 1}, 1);
  CHECK(g1.at(basis_index({1, 2}, 1), c2).is_zero() ==
        g1.at(basis_index({1, 2}, 1), c).is_zero());
  CHECK(g1.at(basis_index({1, 2}, 1), c2) * g1.at(basis_index({2, 1}, 1), c) ==
        g1.at(basis_index({1, 2}, 1), c) * g1.at(basis_index({2, 1}, 1), c2));
}

TEST_CASE("Defining two-site relations") {
  for (int m = 1; m <= 3; ++m) {
    const auto res = relation_bg_check(m);
    CHECK(res.pass);
    INFO(res.detail);
  }

  // Negative controls: the identity pair and the swapped pair both fail.
  const auto idm = kronecker(SparseMat<Laurent>::identity(2, Laurent(1)),
                             SparseMat<Laurent>::identity(2, Laurent(1)));
  CHECK_FALSE(relation_bg_check_on(idm, 1, "identity-as-beta'").pass);
  CHECK_FALSE(relation_bg_check_on(beta(1), 1, "unprimed-beta-as-beta'").pass);
}

TEST_CASE("Hecke companion operator") {
  for (int m = 1; m <= 2; ++m) {
    const auto bh = hecke_beta_hat(m);
    const auto id = identity_laurent(m, 2);
    CHECK((bh - id.scaled(q)) * (bh + id.scaled(qi)) == SparseMat<Laurent>(bh.dim()));
  }
}

TEST_CASE("Pair-free compatibility of beta-hat and beta") {
  CHECK(pairfree_compatibility_check(1, 1).pass);
  CHECK(pairfree_compatibility_check(2, 2).pass);
  CHECK(pairfree_compatibility_check(3, 3).pass);
}

TEST_CASE("Word actions and embeddings") {
  const Permutation s1 = Permutation::transposition(2, 1);
  CHECK(braid_word_action(s1, 1) == embed_at(beta_prime(1), 1, 1, 2));
  CHECK(hecke_word_action(s1, 1) == embed_at(hecke_beta_hat(1), 1, 1, 2));
  CHECK(braid_word_action(Permutation(2), 1) == identity_laurent(1, 2));

  // embed_at puts the first tensor factor in the most significant block.
  CHECK(embed_at(beta_prime(1), 1, 1, 3) ==
        kronecker(beta_prime(1), SparseMat<Laurent>::identity(2, Laurent(1))));
  CHECK(embed_at(beta_prime(1), 2, 1, 3) ==
        kronecker(SparseMat<Laurent>::identity(2, Laurent(1)), beta_prime(1)));

  // Distant embedded operators commute.
  const auto b1 = embed_at(beta_prime(1), 1, 1, 4);
  const auto b3 = embed_at(beta_prime(1), 3, 1, 4);
  CHECK(commutator(b1, b3).is_zero());
}

TEST_CASE("place_action matches place_permute") {
  const Permutation w = Permutation::from_word(3, {1, 2});
  const auto pw = place_action(w, 1);
  for (std::int64_t k = 0; k < space_dim(1, 3); ++k) {
    const auto idx = basis_multiindex(k, 1, 3);
    const auto target = basis_index(place_permute(idx, w), 1);
    CHECK(pw.at(target, k) == Laurent(1));
  }
  CHECK(pw.nnz() == static_cast<std::size_t>(space_dim(1, 3)));
}

TEST_CASE("q -> 1 degenerates to the Brauer presentation") {
  for (int m = 1; m <= 2; ++m) {
    const auto bp = at_one(beta_prime(m));
    const auto gp = at_one(gamma_prime(m));
    const auto id = SparseMat<Laurent>::identity(bp.dim(), Laurent(1));
    CHECK(bp * bp == id);                         // transpositions square to 1
    CHECK(gp * gp == gp.scaled(Laurent(-2 * m)));  // E^2 = x|_{q=1} E
    CHECK(bp * gp == -gp);                        // r|_{q=1} = -1
    CHECK(gp * bp == -gp);
  }
}

TEST_CASE("Evaluation bridges: mode helpers") {
  const EvalPoint pt = sample_eval_point(3, 1, 2);
  const auto b = beta(1);
  const auto bq = ratfunc_matrix(b);
  CHECK(bq.at(0, 0) == RatFunc(q));
  const auto bp = fp_matrix(b, pt);
  CHECK(fp_entry(bp, 0, 0, pt) == pt(q));
  // Absent entries materialize as the field zero, not the placeholder.
  CHECK(fp_entry(bp, 0, 1, pt) == pt.zero());
}
