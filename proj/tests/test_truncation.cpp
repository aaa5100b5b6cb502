// Truncation layer: the rank-change compression Theta0, its scale
// bookkeeping, the per-label diagram identity, and the commutant mapping.

#include "doctest.h"

#include "qsw/bmw/represent.hpp"
#include "qsw/centralizer/centralizer.hpp"
#include "qsw/tensorspace/modes.hpp"
#include "qsw/truncation/truncation.hpp"

#include <algorithm>
#include <stdexcept>

using namespace qsw;

TEST_CASE("RankPair validates its arguments") {
  CHECK_NOTHROW(RankPair(1, 2, 2));
  CHECK_THROWS_AS(RankPair(2, 2, 2), std::invalid_argument);  // needs m < m0
  CHECK_THROWS_AS(RankPair(0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(RankPair(1, 2, 0), std::invalid_argument);
}

TEST_CASE("RectMat basics") {
  auto id = RectMat::identity(3);
  CHECK(id.rows == 3);
  CHECK(id.cols == 3);
  CHECK(id.at(1, 1) == Laurent(1));
  CHECK(id.at(0, 1) == Laurent());

  id.set(0, 1, Laurent::q());
  id.set(0, 1, Laurent());  // setting zero prunes
  CHECK(id == RectMat::identity(3));
  CHECK_THROWS_AS(id.set(3, 0, Laurent(1)), std::out_of_range);

  RectMat a(2, 3), b(3, 1);
  a.set(0, 2, Laurent::q());
  b.set(2, 0, Laurent::q(-1));
  const auto ab = a * b;
  CHECK(ab.rows == 2);
  CHECK(ab.cols == 1);
  CHECK(ab.at(0, 0) == Laurent(1));
  CHECK_THROWS_AS(void(b * a), std::invalid_argument);
  CHECK(a.scaled(Laurent::q()).at(0, 2) == Laurent::q(2));
}

TEST_CASE("iota and pi: section and retraction") {
  for (auto [m, m0] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const auto inc = iota(m, m0);
    const auto prj = pi(m, m0);
    CHECK(inc.rows == 2 * m0);
    CHECK(inc.cols == 2 * m);
    CHECK(prj * inc == RectMat::identity(2 * m));
    // The small letters land in the middle of the big alphabet.
    CHECK(inc.at(m0 - m, 0) == Laurent(1));

    // Scaled variants compose to q^{m+m0} times the identity.
    CHECK(pi_tilde(m, m0) * iota_tilde(m, m0) ==
          RectMat::identity(2 * m).scaled(Laurent::monomial(m + m0, Rational(1))));
  }
}

TEST_CASE("Theta0: scale, linearity, dimension guard") {
  const int m = 1, m0 = 2, n = 2;
  CHECK(theta0(identity_laurent(m0, n), m, m0, n) ==
        identity_laurent(m, n).scaled(Laurent::monomial((m + m0) * n, Rational(1))));

  const auto a = braid_operator(1, m0, n);
  const auto b = contraction_operator(1, m0, n);
  CHECK(theta0(a + b, m, m0, n) == theta0(a, m, m0, n) + theta0(b, m, m0, n));

  // The big braid operator compresses to q^6 times the small one.
  CHECK(theta0(a, m, m0, n) ==
        braid_operator(1, m, n).scaled(Laurent::monomial(6, Rational(1))));

  CHECK_THROWS_AS(theta0(identity_laurent(m, n), m, m0, n),
                  std::invalid_argument);

  // The rational-function and prime-field overloads act the same way.
  CHECK(theta0(ratfunc_matrix(a), m, m0, n) == ratfunc_matrix(theta0(a, m, m0, n)));
  const EvalPoint pt = sample_eval_point(2, m0, n);
  CHECK(theta0(fp_matrix(a, pt), m, m0, n, pt) ==
        fp_matrix(theta0(a, m, m0, n), pt));
}

TEST_CASE("Theta1 on basis labels") {
  const auto labels = enyang_indices(2);
  const auto [scale, image] = theta1_on_basis(labels[1], 1, 2, 2);
  CHECK(scale == Laurent::monomial(6, Rational(1)));
  CHECK(image == labels[1]);

  EnyangIndex wrong = labels[1];
  wrong.n = 3;
  CHECK_THROWS_AS(theta1_on_basis(wrong, 1, 2, 2), std::invalid_argument);
}

TEST_CASE("Diagram identity: exact instances") {
  const auto r122 = diagram_check(1, 2, 2, Mode::kExact);
  CHECK(r122.all_passed());
  CHECK(r122.labels_total == 3);
  CHECK(r122.labels_passed == 3);
  CHECK(r122.m0_ge_n);
  CHECK_FALSE(r122.point.has_value());
  REQUIRE(r122.checks.size() == 4);  // 3 labels + the scale row
  CHECK(r122.checks[0].name == "diagram[000] 1");
  CHECK(r122.checks[1].name == "diagram[001] T1");
  CHECK(r122.checks[2].name == "diagram[002] E1");
  CHECK(r122.checks[3].name == "theta0-identity-scale");
  CHECK(std::is_sorted(r122.checks.begin(), r122.checks.end(),
                       [](const DualityCheck& a, const DualityCheck& b) {
                         return a.name < b.name;
                       }));

  CHECK(diagram_check(1, 3, 2, Mode::kExact).all_passed());

  // The identity persists below the stable range m0 >= n.
  const auto r123 = diagram_check(1, 2, 3, Mode::kExact);
  CHECK(r123.all_passed());
  CHECK_FALSE(r123.m0_ge_n);
  CHECK(r123.labels_total == 15);
  CHECK(r123.labels_passed == 15);
}

TEST_CASE("Diagram identity: prime-field instance and guards") {
  const auto r233 = diagram_check(2, 3, 3, Mode::kModP, 1);
  CHECK(r233.all_passed());
  CHECK(r233.labels_total == 15);
  CHECK(r233.labels_passed == 15);
  REQUIRE(r233.point.has_value());
  CHECK(is_prime_u64(r233.point->p));

  CHECK_THROWS_AS(diagram_check(1, 4, 4, Mode::kExact),
                  std::invalid_argument);  // (2 m0)^n = 4096 > 128
  CHECK_THROWS_AS(diagram_check(2, 4, 4, Mode::kModP),
                  std::invalid_argument);  // 4096 > 1024
}

TEST_CASE("Theta0 maps the invariant algebra into the invariant algebra") {
  CHECK(commutant_mapping_check(1, 2, 2).pass);

  // Negative control: compressing the commutant of the big BMW operators
  // does NOT land in the commutant of the small ones; some compressed
  // element fails to commute.  (The inclusion only holds for the
  // quantum-group commutants.)
  std::vector<SparseMat<RatFunc>> big_gens;
  for (const auto& g : bmw_operator_generators(2, 2)) {
    big_gens.push_back(ratfunc_matrix(g));
  }
  const auto big = commutant<RatFunc>(big_gens);
  std::vector<SparseMat<RatFunc>> small_gens;
  for (const auto& g : bmw_operator_generators(1, 2)) {
    small_gens.push_back(ratfunc_matrix(g));
  }
  bool some_fail = false;
  for (const auto& b : big.basis) {
    const auto compressed = theta0(b, 1, 2, 2);
    for (const auto& g : small_gens) {
      if (!commutator(compressed, g).is_zero()) {
        some_fail = true;
        break;
      }
    }
    if (some_fail) break;
  }
  CHECK(some_fail);
}
