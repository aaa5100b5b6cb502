// Centralizer layer: algebra closures, commutants, the two module maps,
// the duality report, and the bimodule dimension count.

#include "doctest.h"

#include "qsw/centralizer/centralizer.hpp"

#include <algorithm>
#include <stdexcept>

using namespace qsw;

namespace {
const RatFunc one(1);

SparseMat<RatFunc> unit_matrix(std::int64_t dim, std::int64_t r, std::int64_t c) {
  SparseMat<RatFunc> out(dim);
  out.set(r, c, one);
  return out;
}
}  // namespace

TEST_CASE("Algebra closure") {
  // A nilpotent generator spans {id, E_01}.
  const auto nil = unit_matrix(2, 0, 1);
  CHECK(algebra_closure<RatFunc>({nil}).dim() == 2);

  // diag(q, 1) generates the diagonal algebra.
  SparseMat<RatFunc> diag(2);
  diag.set(0, 0, RatFunc(Laurent::q()));
  diag.set(1, 1, one);
  CHECK(algebra_closure<RatFunc>({diag}).dim() == 2);

  // Both off-diagonal matrix units generate everything.
  CHECK(algebra_closure<RatFunc>({unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)})
            .dim() == 4);

  // The empty list closes to the scalar line when given the identity.
  CHECK(algebra_closure<RatFunc>({}, SparseMat<RatFunc>::identity(3, one))
            .dim() == 1);
}

TEST_CASE("Commutant") {
  // Commutant of nothing is the full matrix algebra.
  CHECK(commutant<RatFunc>({}, SparseMat<RatFunc>::identity(3, one)).dim() == 9);

  // Commutant of all matrix units is the scalars.
  CHECK(commutant<RatFunc>({unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)}).dim() ==
        1);

  // Commutant of a generic diagonal is the diagonal algebra.
  SparseMat<RatFunc> diag(2);
  diag.set(0, 0, RatFunc(Laurent::q()));
  diag.set(1, 1, one);
  const auto comm = commutant<RatFunc>({diag});
  CHECK(comm.dim() == 2);
  for (const auto& b : comm.basis) {
    CHECK(commutator(b, diag).is_zero());
  }

  // The exact-mode size guard refuses d > 64.
  CHECK_THROWS_AS(
      commutant<RatFunc>({SparseMat<RatFunc>::identity(65, one)}),
      std::invalid_argument);
}

TEST_CASE("spans_equal distinguishes genuinely different spans") {
  const auto e01 = unit_matrix(2, 0, 1);
  const auto e10 = unit_matrix(2, 1, 0);
  const auto sum = e01 + e10;
  CHECK(spans_equal<RatFunc>({e01, e10}, {sum, e01}));
  CHECK_FALSE(spans_equal<RatFunc>({e01}, {e10}));
  CHECK_FALSE(spans_equal<RatFunc>({e01, e10}, {sum}));
}

TEST_CASE("Generator inventories") {
  CHECK(quantum_group_generators(1, 2).size() == 4);
  CHECK(quantum_group_generators(3, 2).size() == 12);
  CHECK(bmw_operator_generators(1, 2).size() == 2);
  CHECK(bmw_operator_generators(2, 4).size() == 6);
  CHECK(frt_operator_generators(1, 3).size() == 4);
  for (const auto& g : quantum_group_generators(2, 3)) {
    CHECK(g.dim() == space_dim(2, 3));
  }
}

TEST_CASE("Module maps and their images at (1,2)") {
  const auto psi = psi_image(1, 2);
  const auto phi = phi_image(1, 2);
  CHECK(psi.dim() == 10);
  CHECK(phi.dim() == 2);

  // phi image is exactly the commutant of the quantum-group generators.
  std::vector<SparseMat<RatFunc>> ugens;
  for (const auto& g : quantum_group_generators(1, 2)) {
    ugens.push_back(ratfunc_matrix(g));
  }
  CHECK(spans_equal<RatFunc>(phi.basis, commutant<RatFunc>(ugens).basis));

  // Prime-field images at a sampled point have the same dimensions.
  const EvalPoint pt = sample_eval_point(1, 1, 2);
  CHECK(psi_image_modp(1, 2, pt).dim() == 10);
  CHECK(phi_image_modp(1, 2, pt).dim() == 2);
}

TEST_CASE("Duality report: exact instances") {
  const auto check_named = [](const DualityReport& rep, const std::string& name) {
    for (const auto& c : rep.checks) {
      if (c.name == name) return c;
    }
    FAIL("missing check " << name);
    return DualityCheck{};
  };

  const auto r12 = duality_report(1, 2, Mode::kExact);
  CHECK(r12.all_passed());
  CHECK(r12.checks.size() == 5);
  CHECK(check_named(r12, "psi-dimension-matches-mys-count").actual == "10");
  CHECK(check_named(r12, "psi-equals-commutant-of-bmw").status == "pass");
  CHECK(check_named(r12, "phi-equals-commutant-of-uq").actual ==
        "equal spans, dim 2");
  // m < n has no double-factorial claim.
  CHECK(check_named(r12, "phi-dimension-is-odd-double-factorial").status ==
        "skipped");
  CHECK_FALSE(r12.point.has_value());
  CHECK_FALSE(r12.degeneracy_exhausted);

  // Rows arrive sorted by name.
  CHECK(std::is_sorted(r12.checks.begin(), r12.checks.end(),
                       [](const DualityCheck& a, const DualityCheck& b) {
                         return a.name < b.name;
                       }));

  const auto r13 = duality_report(1, 3, Mode::kExact);
  CHECK(r13.all_passed());
  CHECK(check_named(r13, "psi-dimension-matches-mys-count").actual == "20");
  CHECK(check_named(r13, "phi-equals-commutant-of-uq").actual ==
        "equal spans, dim 5");

  const auto r22 = duality_report(2, 2, Mode::kExact);
  CHECK(r22.all_passed());
  CHECK(check_named(r22, "psi-dimension-matches-mys-count").actual == "126");
  CHECK(check_named(r22, "phi-dimension-is-odd-double-factorial").status ==
        "pass");
  CHECK(check_named(r22, "phi-dimension-is-odd-double-factorial").expected ==
        "3");
}

TEST_CASE("Duality report: prime-field instances") {
  // (3,3): phi side certified, psi side over the closure bound -> skipped.
  const auto r33 = duality_report(3, 3, Mode::kModP, 7);
  CHECK(r33.all_passed());
  REQUIRE(r33.point.has_value());
  CHECK(is_prime_u64(r33.point->p));
  bool saw_skip = false, saw_phi = false;
  for (const auto& c : r33.checks) {
    if (c.name == "psi-equals-commutant-of-bmw") {
      CHECK(c.status == "skipped");
      saw_skip = true;
    }
    if (c.name == "phi-dimension-is-odd-double-factorial") {
      CHECK(c.status == "pass");
      CHECK(c.actual.find("15") != std::string::npos);
      saw_phi = true;
    }
  }
  CHECK(saw_skip);
  CHECK(saw_phi);

  // (2,3): d = 64 sits exactly at the prime-field closure bound, so the psi
  // side runs; m < n keeps the double-factorial row skipped.
  const auto r23 = duality_report(2, 3, Mode::kModP, 1);
  CHECK(r23.all_passed());
  for (const auto& c : r23.checks) {
    if (c.name == "psi-dimension-matches-mys-count") {
      CHECK(c.status == "pass");
      CHECK(c.expected == "672");
    }
    if (c.name == "phi-equals-commutant-of-uq") {
      CHECK(c.actual.find("14") != std::string::npos);
    }
  }

  // A caller-fixed modulus is honored.
  const auto fixed = duality_report(1, 2, Mode::kModP, 1, 2147483647ULL);
  CHECK(fixed.all_passed());
  REQUIRE(fixed.point.has_value());
  CHECK(fixed.point->p == 2147483647ULL);
}

TEST_CASE("Duality report argument guards") {
  CHECK_THROWS_AS(duality_report(0, 2, Mode::kExact), std::invalid_argument);
  CHECK_THROWS_AS(duality_report(1, 1, Mode::kExact), std::invalid_argument);
}

TEST_CASE("Bimodule dimension bookkeeping") {
  const auto r12 = bimodule_dimension_check(1, 2);
  CHECK(r12.pass);
  CHECK(r12.detail.find("4 = 3*1*1 + 1*1*1") != std::string::npos);

  CHECK(bimodule_dimension_check(2, 2).pass);
  CHECK(bimodule_dimension_check(3, 3).pass);
  const auto r33 = bimodule_dimension_check(3, 3);
  CHECK(r33.detail.find("216") != std::string::npos);

  // Below the stable range the count genuinely fails, so the call refuses.
  CHECK_THROWS_AS(bimodule_dimension_check(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(bimodule_dimension_check(1, 3), std::invalid_argument);
}
