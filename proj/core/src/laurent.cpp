#include "qsw/scalars/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qsw {

Laurent::Laurent(long constant) {
  if (constant != 0) coeff_[0] = Rational(constant);
}

Laurent::Laurent(Rational constant) {
  if (constant != 0) coeff_[0] = std::move(constant);
}

Laurent Laurent::monomial(int exp, Rational coeff) {
  Laurent p;
  if (coeff != 0) p.coeff_[exp] = std::move(coeff);
  return p;
}

bool Laurent::is_constant() const {
  return coeff_.empty() || (coeff_.size() == 1 && coeff_.begin()->first == 0);
}

Rational Laurent::coeff(int exp) const {
  auto it = coeff_.find(exp);
  return it == coeff_.end() ? Rational(0) : it->second;
}

int Laurent::min_deg() const {
  if (coeff_.empty()) throw std::domain_error("min_deg of zero polynomial");
  return coeff_.begin()->first;
}

int Laurent::max_deg() const {
  if (coeff_.empty()) throw std::domain_error("max_deg of zero polynomial");
  return coeff_.rbegin()->first;
}

Laurent Laurent::bar() const {
  Laurent p;
  for (const auto& [e, c] : coeff_) p.coeff_[-e] = c;
  return p;
}

Rational Laurent::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : coeff_) s += c;
  return s;
}

Rational Laurent::at_minus_one() const {
  Rational s = 0;
  for (const auto& [e, c] : coeff_) {
    if (e % 2 == 0) s += c; else s -= c;
  }
  return s;
}

Laurent Laurent::operator-() const {
  Laurent p;
  for (const auto& [e, c] : coeff_) p.coeff_[e] = -c;
  return p;
}

void Laurent::prune(int exp) {
  auto it = coeff_.find(exp);
  if (it != coeff_.end() && it->second == 0) coeff_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.coeff_) {
    coeff_[e] += c;
    prune(e);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  for (const auto& [e, c] : rhs.coeff_) {
    coeff_[e] -= c;
    prune(e);
  }
  return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  Laurent out;
  if (lhs.coeff_.empty() || rhs.coeff_.empty()) return out;
  std::map<int, Rational>& acc = out.coeff_;
  for (const auto& [ea, ca] : lhs.coeff_) {
    for (const auto& [eb, cb] : rhs.coeff_) {
      acc[ea + eb] += ca * cb;
    }
  }
  for (auto it = acc.begin(); it != acc.end();) {
    it = (it->second == 0) ? acc.erase(it) : std::next(it);
  }
  return out;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
  *this = *this * rhs;
  return *this;
}

Laurent Laurent::div_exact(const Laurent& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  // Long division from the top degree.  If the division is exact, every
  // quotient exponent lies in [min_deg() - divisor.min_deg(), ...]; once a
  // step would go below that bound the division cannot be exact.
  const int quot_min = min_deg() - divisor.min_deg();
  const int dmax = divisor.max_deg();
  const Rational dlead = divisor.coeff(dmax);
  Laurent rem = *this;
  Laurent quot;
  while (!rem.is_zero()) {
    const int e = rem.max_deg() - dmax;
    if (e < quot_min) throw std::domain_error("inexact Laurent division");
    const Laurent t = Laurent::monomial(e, rem.coeff(rem.max_deg()) / dlead);
    quot += t;
    rem -= t * divisor;  // strictly lowers rem.max_deg()
  }
  return quot;
}

std::string Laurent::to_string() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print from the highest exponent down, matching handwritten convention.
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    const int e = it->first;
    Rational c = it->second;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const bool unit = (c == 1);
    if (e == 0) {
      os << c.get_str();
    } else {
      if (!unit) os << c.get_str() << "*";
      os << (e == 1 ? "q" : "q^" + std::to_string(e));
    }
    first = false;
  }
  return os.str();
}

Laurent operator*(const Rational& c, const Laurent& p) {
  return Laurent(c) * p;
}

}  // namespace qsw
