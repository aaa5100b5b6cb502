// BMW layer: words, the defining relation suite with negative controls,
// Enyang labels and image ranks, and structure constants.

#include "doctest.h"

#include "qsw/bmw/enyang.hpp"
#include "qsw/bmw/represent.hpp"
#include "qsw/bmw/word.hpp"
#include "qsw/scalars/qpoly.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

using namespace qsw;

namespace {

const CheckResult& row_named(const std::vector<CheckResult>& rows,
                             const std::string& prefix) {
  for (const auto& r : rows) {
    if (r.name.rfind(prefix, 0) == 0) return r;
  }
  throw std::runtime_error("no relation row named " + prefix);
}

// Entrywise |coefficient| q^exponent: strips every sign from the operator.
SparseMat<Laurent> strip_signs(const SparseMat<Laurent>& mat) {
  return mat.map_entries<Laurent>([](const Laurent& f) {
    Laurent out;
    for (const auto& [e, c] : f.terms()) out += Laurent::monomial(e, abs(c));
    return out;
  });
}

}  // namespace

TEST_CASE("BMW words") {
  BmwWord w;
  w.n = 3;
  CHECK(w.empty());
  CHECK(w.to_string() == "1");
  w.push_t(1);
  w.push_e(1);
  w.push_t(2);
  CHECK(w.to_string() == "T1 E1 T2");
  CHECK(w.reversed().to_string() == "T2 E1 T1");
  CHECK(w.reversed().reversed() == w);
  CHECK(BmwLetter::T(1) == BmwLetter::T(1));
  CHECK_FALSE(BmwLetter::T(1) == BmwLetter::E(1));
}

TEST_CASE("Defining relations hold at the specialized parameters") {
  for (auto [m, n] :
       {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const auto rows = relation_suite(m, n);
    REQUIRE(rows.size() == 8);
    for (const auto& r : rows) {
      INFO("(" << m << "," << n << ") " << r.name << ": " << r.detail);
      CHECK(r.pass);
    }
  }
  // Small-n families are reported as vacuous, not silently dropped.
  const auto rows = relation_suite(1, 2);
  CHECK(row_named(rows, "relation(3) braid").detail.find("vacuous") !=
        std::string::npos);
}

TEST_CASE("Negative controls distinguish the relation families") {
  const int m = 1, n = 2;
  const auto braid2 = beta_prime(m);
  const auto cap2 = gamma_prime(m);

  // Negating the contraction flips relation (2) but preserves (7).
  const auto neg = relation_suite_on(braid2, -cap2, m, n);
  CHECK_FALSE(row_named(neg, "relation(2)").pass);
  CHECK(row_named(neg, "relation(7)").pass);

  // Stripping the signs of the contraction destroys its eigenvalue law (7).
  const auto stripped = relation_suite_on(braid2, strip_signs(cap2), m, n);
  CHECK_FALSE(row_named(stripped, "relation(7)").pass);

  // The genuine pair passes everything.
  for (const auto& r : relation_suite_on(braid2, cap2, m, n)) CHECK(r.pass);
}

TEST_CASE("Transpose realizes the anti-involution") {
  CHECK(star_symmetry_check(1, 2).pass);
  CHECK(star_symmetry_check(2, 2).pass);
  CHECK(star_symmetry_check(1, 3).pass);
}

TEST_CASE("Enyang labels enumerate (2n-1)!! basis words") {
  CHECK(enyang_indices(1).size() == 1);
  CHECK(enyang_indices(2).size() == 3);
  CHECK(enyang_indices(3).size() == 15);
  CHECK(enyang_indices(4).size() == 105);

  const auto labels = enyang_indices(2);
  CHECK(enyang_word(labels[0]).to_string() == "1");
  CHECK(enyang_word(labels[1]).to_string() == "T1");
  CHECK(enyang_word(labels[2]).to_string() == "E1");
  CHECK(labels[2].f == 1);
  CHECK(labels[0].to_string() == "f=0; d1=[]; sigma=[]; d2=[]");

  // The * anti-involution swaps d1 with d2 and inverts sigma; on operators
  // it is realized by the transpose.
  for (const auto& lab : enyang_indices(3)) {
    EnyangIndex star = lab;
    std::swap(star.d1, star.d2);
    star.sigma = lab.sigma.inverse();
    CHECK(represent(enyang_word(star), 2) ==
          represent(enyang_word(lab), 2).transpose());
  }
}

TEST_CASE("represent: words to operators") {
  BmwWord empty;
  empty.n = 2;
  CHECK(represent(empty, 1) == identity_laurent(1, 2));

  BmwWord t1;
  t1.n = 2;
  t1.push_t(1);
  CHECK(represent(t1, 1) == beta_prime(1));

  BmwWord e1;
  e1.n = 2;
  e1.push_e(1);
  CHECK(represent(e1, 1) == contraction_operator(1, 1, 2));

  // Word order means left-to-right operator product.
  BmwWord te;
  te.n = 2;
  te.push_t(1);
  te.push_e(1);
  CHECK(represent(te, 1) == beta_prime(1) * contraction_operator(1, 1, 2));

  const auto mats = enyang_matrices(1, 2);
  REQUIRE(mats.size() == 3);
  CHECK(mats[0] == identity_laurent(1, 2));
  CHECK(mats[1] == beta_prime(1));
}

TEST_CASE("Enyang image ranks: faithful and non-faithful sizes") {
  // m >= n is faithful: full rank (2n-1)!!.
  CHECK(enyang_image_rank_exact(2, 2) == 3);
  // m < n collapses the image.
  CHECK(enyang_image_rank_exact(1, 2) == 2);
  CHECK(enyang_image_rank_exact(1, 3) == 5);
  // Prime-field certificates for the larger sizes.
  CHECK(enyang_image_rank_modp(3, 3, 1) == 15);
  CHECK(enyang_image_rank_modp(2, 3, 1) == 14);
}

TEST_CASE("Structure constants at n = 2") {
  const auto tab = structure_constants(2);
  REQUIRE(tab.labels.size() == 3);
  REQUIRE(tab.coeff.size() == 3);

  const Laurent z = bmw_z();
  const Laurent r = bmw_r(2);   // the faithful representation has m = n = 2
  const Laurent x = bmw_x(2);
  CHECK(r == Laurent::monomial(5, Rational(-1)));

  // Identity row and column.
  for (int b = 0; b < 3; ++b) {
    for (int k = 0; k < 3; ++k) {
      CHECK(tab.coeff[0][b][k] == (k == b ? Laurent(1) : Laurent()));
      CHECK(tab.coeff[b][0][k] == (k == b ? Laurent(1) : Laurent()));
    }
  }

  // T1 T1 = 1 + z T1 - z r^-1 E1.
  CHECK(tab.coeff[1][1][0] == Laurent(1));
  CHECK(tab.coeff[1][1][1] == z);
  CHECK(tab.coeff[1][1][2] == -(z * Laurent::monomial(-5, Rational(-1))));

  // T1 E1 = E1 T1 = r^-1 E1.
  CHECK(tab.coeff[1][2][2] == Laurent::monomial(-5, Rational(-1)));
  CHECK(tab.coeff[2][1][2] == Laurent::monomial(-5, Rational(-1)));
  CHECK(tab.coeff[1][2][0] == Laurent());

  // E1 E1 = x E1.
  CHECK(tab.coeff[2][2][0] == Laurent());
  CHECK(tab.coeff[2][2][1] == Laurent());
  CHECK(tab.coeff[2][2][2] == x);

  // The n = 4 exact table is guarded.
  CHECK_THROWS_AS(structure_constants(4), std::invalid_argument);
}

TEST_CASE("Prime-field structure constants agree on requested pairs") {
  const auto tab = structure_constants_modp(3, 1, {{0, 1}, {1, 1}});
  REQUIRE(tab.labels.size() == 15);

  // Identity row: 1 * (label 1) = label 1.
  const auto& row01 = tab.coeff.at({0, 1});
  REQUIRE(row01.size() == 15);
  for (int k = 0; k < 15; ++k) {
    CHECK(row01[k] == (k == 1 ? tab.point.one() : tab.point.zero()));
  }

  // The (1,1) product matches the exact table under evaluation.
  const auto exact = structure_constants(3);
  const auto& row11 = tab.coeff.at({1, 1});
  for (int k = 0; k < 15; ++k) {
    CHECK(row11[k] == tab.point(exact.coeff[1][1][k]));
  }
}
