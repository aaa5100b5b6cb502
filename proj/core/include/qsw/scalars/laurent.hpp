// Laurent polynomials over the rationals: the ring Q[q, q^-1].
//
// This is the integral form in which every operator of the engine is first
// constructed.  Elements are kept in canonical form (zero coefficients are
// never stored), so structural equality is mathematical equality.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsw {

/// Arbitrary-precision rational number (GMP).
using Rational = mpq_class;

/// Arbitrary-precision integer (GMP).
using Integer = mpz_class;

/// A Laurent polynomial sum_e c_e q^e with rational coefficients.
///
/// Canonical form: the coefficient map contains no zero entries, so the
/// zero polynomial is the empty map and operator== is exact equality.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long constant);  // NOLINT(google-explicit-constructor)
  Laurent(Rational constant);  // NOLINT(google-explicit-constructor)

  /// The monomial c * q^exp.
  static Laurent monomial(int exp, Rational coeff = 1);

  /// The variable q (or q^exp when an exponent is supplied).
  static Laurent q(int exp = 1) { return monomial(exp); }

  bool is_zero() const { return coeff_.empty(); }

  /// True when the polynomial is a single monomial c * q^e (c != 0).
  bool is_monomial() const { return coeff_.size() == 1; }

  /// True when the polynomial is a rational constant (possibly zero).
  bool is_constant() const;

  /// Coefficient of q^exp (zero when absent).
  Rational coeff(int exp) const;

  /// Smallest exponent with nonzero coefficient.  Requires !is_zero().
  int min_deg() const;

  /// Largest exponent with nonzero coefficient.  Requires !is_zero().
  int max_deg() const;

  /// Number of nonzero terms.
  std::size_t term_count() const { return coeff_.size(); }

  /// Sorted (exponent, coefficient) view of the nonzero terms.
  const std::map<int, Rational>& terms() const { return coeff_; }

  /// The bar involution q |-> q^-1 (negates every exponent).
  Laurent bar() const;

  /// Substitution q |-> 1 (sum of all coefficients).
  Rational at_one() const;

  /// Substitution q |-> -1.
  Rational at_minus_one() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);

  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);

  bool operator==(const Laurent& rhs) const { return coeff_ == rhs.coeff_; }
  bool operator!=(const Laurent& rhs) const { return !(*this == rhs); }

  /// Exact division: *this = quotient * divisor must hold with Laurent
  /// quotient.  Throws std::domain_error when the division is not exact.
  Laurent div_exact(const Laurent& divisor) const;

  /// Human-readable form, e.g. "q^2 - 2 + q^-2".
  std::string to_string() const;

 private:
  void prune(int exp);  // drop the entry at exp when it became zero

  std::map<int, Rational> coeff_;
};

/// Scalar multiple.
Laurent operator*(const Rational& c, const Laurent& p);

}  // namespace qsw
