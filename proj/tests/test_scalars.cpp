// Exact scalar layers: Laurent polynomials, the rational-function field,
// prime-field evaluation, and the shared linear-algebra kernels.

#include "doctest.h"

#include "qsw/scalars/laurent.hpp"
#include "qsw/scalars/linalg.hpp"
#include "qsw/scalars/primefield.hpp"
#include "qsw/scalars/ratfunc.hpp"
#include "qsw/scalars/scalar.hpp"

#include <stdexcept>

using namespace qsw;

namespace {
const Laurent q = Laurent::q();
const Laurent qi = Laurent::q(-1);
}  // namespace

TEST_CASE("Laurent arithmetic and structure") {
  const Laurent z = q - qi;

  CHECK(Laurent().is_zero());
  CHECK(Laurent(0).is_zero());
  CHECK(Laurent(1).is_constant());
  CHECK(q.is_monomial());
  CHECK_FALSE(z.is_monomial());

  CHECK(q * qi == Laurent(1));
  CHECK((q + qi) * (q - qi) == Laurent::q(2) - Laurent::q(-2));
  CHECK(z * z == Laurent::q(2) - Laurent(2) + Laurent::q(-2));
  CHECK(-z == qi - q);
  CHECK(z - z == Laurent());

  // monomial(exponent, coefficient); coefficient defaults to 1.
  const Laurent m = Laurent::monomial(-3, Rational(5, 2));
  CHECK(m.coeff(-3) == Rational(5, 2));
  CHECK(m.coeff(0) == 0);
  CHECK(m.min_deg() == -3);
  CHECK(m.max_deg() == -3);
  CHECK(m.term_count() == 1);

  const Laurent f = Laurent::q(2) - Laurent(2) + Laurent::q(-2);
  CHECK(f.min_deg() == -2);
  CHECK(f.max_deg() == 2);
  CHECK(f.term_count() == 3);
  CHECK(f.to_string() == "q^2 - 2 + q^-2");
  CHECK(Laurent().to_string() == "0");
}

TEST_CASE("Laurent bar involution and integer evaluations") {
  const Laurent f = Laurent::q(3) + Laurent(2) * Laurent::q(-1);
  CHECK(f.bar() == Laurent::q(-3) + Laurent(2) * q);
  CHECK(f.bar().bar() == f);

  const Laurent z = q - qi;
  CHECK(z.at_one() == 0);
  CHECK(z.at_minus_one() == 0);
  CHECK(f.at_one() == 3);
  CHECK(f.at_minus_one() == Rational(-3));
}

TEST_CASE("Laurent exact division") {
  const Laurent num = Laurent::q(2) - Laurent::q(-2);
  CHECK(num.div_exact(q - qi) == q + qi);
  CHECK(num.div_exact(q + qi) == q - qi);
  CHECK_THROWS_AS(Laurent(1).div_exact(q + Laurent(1)), std::domain_error);
  CHECK_THROWS_AS(num.div_exact(Laurent()), std::domain_error);
}

TEST_CASE("RatFunc simplification and field axioms") {
  const RatFunc one(1);

  // (q^2 - 1) / (q - 1) = q + 1 after cancellation.
  const RatFunc red = RatFunc::fraction(Laurent::q(2) - Laurent(1), q - Laurent(1));
  CHECK(red == RatFunc(q + Laurent(1)));
  CHECK(red.is_laurent());
  CHECK(red.to_laurent() == q + Laurent(1));

  // Partial fractions recombine: 1/(q-1) + 1/(q+1) = 2q/(q^2-1).
  const RatFunc a = RatFunc::fraction(Laurent(1), q - Laurent(1));
  const RatFunc b = RatFunc::fraction(Laurent(1), q + Laurent(1));
  CHECK(a + b == RatFunc::fraction(Laurent(2) * q, Laurent::q(2) - Laurent(1)));
  CHECK_FALSE(a.is_laurent());

  CHECK(a * a.inverse() == one);
  CHECK(a - a == RatFunc());
  CHECK(a / a == one);
  CHECK(RatFunc(Rational(1, 2)) + RatFunc(Rational(1, 2)) == one);

  CHECK_THROWS_AS(RatFunc().inverse(), std::domain_error);
  CHECK_THROWS_AS(RatFunc::fraction(Laurent(1), Laurent()), std::domain_error);
}

TEST_CASE("Fp arithmetic and the mixed-modulus guard") {
  const Fp a(3, 7), b(5, 7);
  CHECK((a + b).v == 1);
  CHECK((a * b).v == 1);
  CHECK((a - b).v == 5);
  CHECK((-a).v == 4);
  CHECK(a.inverse().v == 5);  // 3 * 5 = 15 = 1 mod 7
  CHECK((b / a).v == 4);      // 5 * 3^-1 = 25 = 4 mod 7
  CHECK(fp_pow(a, 6).v == 1);
  CHECK(fp_pow(a, -1).v == 5);
  CHECK(Fp(0, 7).is_zero());
  CHECK_THROWS_AS(Fp(0, 7).inverse(), BadEvaluation);

  const Fp c(1, 11);
  CHECK_THROWS_AS(void(a + c), std::logic_error);
  CHECK_THROWS_AS(void(a == c), std::logic_error);
  // Even the default placeholder refuses to mix with a real element.
  CHECK_THROWS_AS(void(Fp() == a), std::logic_error);
}

TEST_CASE("Deterministic primality testing") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(2147483647ULL));  // 2^31 - 1
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(2147483649ULL));  // 3 * 715827883
  CHECK(is_prime_u64(1000000007ULL));
  CHECK_FALSE(is_prime_u64(1000000007ULL * 3));
}

TEST_CASE("Evaluation points: sampling, determinism, degeneration") {
  const EvalPoint pt = sample_eval_point(42, 2, 3);
  CHECK(pt.p > (1ULL << 30));
  CHECK(is_prime_u64(pt.p));

  const EvalPoint again = sample_eval_point(42, 2, 3);
  CHECK(pt.p == again.p);
  CHECK(pt.c == again.c);

  const EvalPoint other = sample_eval_point(42, 2, 3, 1);
  CHECK((other.p != pt.p || other.c != pt.c));

  CHECK(pt(Laurent::q()).v == pt.c);
  CHECK(pt(Laurent(1)) == pt.one());
  CHECK((pt.from_rational(Rational(1, 2)) * Fp(2, pt.p)) == pt.one());

  // q -> c makes 1/(q - c) blow up.
  const RatFunc pole =
      RatFunc::fraction(Laurent(1), Laurent::q() - Laurent(Rational(pt.c)));
  CHECK_THROWS_AS(void(pt(pole)), BadEvaluation);

  // Fixed-modulus sampling: accepts big primes, rejects everything else.
  const EvalPoint fixed = sample_eval_point_at_prime(2147483647ULL, 1, 1, 2);
  CHECK(fixed.p == 2147483647ULL);
  CHECK_THROWS_AS(sample_eval_point_at_prime(1000003ULL, 1, 1, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_eval_point_at_prime(2147483649ULL, 1, 1, 2),
                  std::invalid_argument);
}

TEST_CASE("Scalar variant helpers") {
  CHECK(mode_name(Mode::kExact) == std::string("exact"));
  CHECK(mode_name(Mode::kModP) == std::string("modp"));
  CHECK(scalar_is_zero(Scalar(Laurent())));
  CHECK_FALSE(scalar_is_zero(Scalar(RatFunc(1))));
  CHECK(scalar_to_string(Scalar(Laurent::q(2))) == "q^2");
}

TEST_CASE("RowSpace reduced echelon spans") {
  lin::RowSpace<RatFunc> sp;
  lin::SparseVec<RatFunc> v1{{0, RatFunc(1)}, {1, RatFunc(Laurent::q())}};
  lin::SparseVec<RatFunc> v2{{1, RatFunc(1)}};
  CHECK(sp.insert(v1));
  CHECK(sp.insert(v2));
  CHECK(sp.dim() == 2);
  CHECK_FALSE(sp.insert(v1));  // already in the span
  CHECK(sp.contains({{0, RatFunc(5)}}));
  CHECK_FALSE(sp.contains({{2, RatFunc(1)}}));

  // The stored basis is fully reduced: the pivot-0 row lost its q.
  const auto& rows = sp.rows();
  REQUIRE(rows.count(0) == 1);
  CHECK(rows.at(0).size() == 1);
}

TEST_CASE("Dense rank, nullspace, solve over Q(q)") {
  using Mat = lin::DenseMatrix<RatFunc>;
  const RatFunc Q(Laurent::q());

  Mat mat{{RatFunc(1), Q}, {Q, Q * Q}};  // rank 1: row2 = q * row1
  CHECK(lin::dense_rank(mat) == 1);

  const auto ns = lin::dense_nullspace(mat, RatFunc(1));
  REQUIRE(ns.size() == 1);
  // Kernel vector (-q, 1): check it annihilates the matrix.
  CHECK(mat[0][0] * ns[0][0] + mat[0][1] * ns[0][1] == RatFunc());

  Mat a{{RatFunc(1), RatFunc(1)}, {RatFunc(), Q}};
  const auto x = lin::dense_solve(a, {RatFunc(2), Q * Q}, RatFunc(1));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == RatFunc(2) - Q);
  CHECK((*x)[1] == Q);

  Mat sing{{RatFunc(1)}, {RatFunc(1)}};
  CHECK_FALSE(lin::dense_solve(sing, {RatFunc(1), RatFunc(2)}, RatFunc(1))
                  .has_value());
}

TEST_CASE("Fraction-free Laurent rank") {
  using LMat = lin::DenseMatrix<Laurent>;
  const Laurent z = q - qi;
  LMat full{{q, Laurent(1)}, {Laurent(1), qi}};       // det = 0
  LMat reg{{q, Laurent(1)}, {Laurent(1), qi + z}};    // det = qz != 0
  CHECK(lin::laurent_rank_fraction_free(full) == 1);
  CHECK(lin::laurent_rank_fraction_free(reg) == 2);
  CHECK(lin::laurent_rank_fraction_free({}) == 0);
}

TEST_CASE("field_div overloads") {
  CHECK(lin::field_div(RatFunc(Laurent::q(2)), RatFunc(Laurent::q())) ==
        RatFunc(Laurent::q()));
  CHECK(lin::field_div(Fp(6, 7), Fp(3, 7)) == Fp(2, 7));
}
