// The rational function field Q(q), in canonical form.
//
// An element is stored as   scale * q^qexp * num(q) / den(q)   where
//   * scale is a nonzero rational (zero exactly for the zero element),
//   * num and den are primitive integer polynomials with positive leading
//     coefficient and nonzero constant term, and gcd(num, den) = 1.
// Factoring the minimal power of q into the explicit monomial q^qexp keeps
// Laurent inputs canonical, and carrying the rational content in `scale`
// keeps num/den integral and content-free.  Structural equality is field
// equality.  Polynomial gcds use subresultant remainder sequences to avoid
// the coefficient blowup of naive Euclid.

#pragma once

#include "qsw/scalars/laurent.hpp"

#include <string>
#include <vector>

namespace qsw {

/// Dense integer polynomial: coeffs[e] is the coefficient of q^e; no
/// trailing zero coefficients; the zero polynomial is the empty vector.
using ZPoly = std::vector<Integer>;

namespace zpoly {
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly neg(ZPoly a);
Integer content(const ZPoly& a);           // nonnegative; 0 for the zero poly
ZPoly primitive_part(const ZPoly& a);      // a / content(a), sign preserved
ZPoly gcd(ZPoly a, ZPoly b);               // primitive, positive leading coeff
ZPoly div_exact(const ZPoly& a, const ZPoly& b);  // throws when not exact
}  // namespace zpoly

class RatFunc {
 public:
  RatFunc() = default;                    // zero
  RatFunc(long constant);                 // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& constant);      // NOLINT(google-explicit-constructor)
  RatFunc(const Laurent& p);              // NOLINT(google-explicit-constructor)

  /// num / den as Laurent polynomials; throws on den = 0.
  static RatFunc fraction(const Laurent& num, const Laurent& den);

  bool is_zero() const { return scale_ == 0; }
  bool is_one() const;

  /// True when the element lies in Q[q, q^-1] (denominator 1).
  bool is_laurent() const;

  /// Conversion back to a Laurent polynomial; requires is_laurent().
  Laurent to_laurent() const;

  RatFunc operator-() const;
  RatFunc inverse() const;                // throws on zero

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
  RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
  RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }
  RatFunc& operator/=(const RatFunc& rhs) { return *this = *this / rhs; }

  bool operator==(const RatFunc& rhs) const;
  bool operator!=(const RatFunc& rhs) const { return !(*this == rhs); }

  const Rational& scale() const { return scale_; }
  int qexp() const { return qexp_; }
  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }

  std::string to_string() const;

 private:
  static RatFunc normalized(Rational scale, int qexp, ZPoly num, ZPoly den);

  Rational scale_ = 0;
  int qexp_ = 0;
  ZPoly num_{Integer(1)};
  ZPoly den_{Integer(1)};
};

}  // namespace qsw
