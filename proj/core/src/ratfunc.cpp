#include "qsw/scalars/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace qsw {
namespace zpoly {

namespace {
void strip(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.  The exact
/// power of lc(b) matters for the subresultant divisions downstream, so the
/// remainder is topped up when the degree drops by more than one per step.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const int db = degree(b);
  const Integer lb = b.back();
  int e = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[j + shift] -= la * b[j];
    strip(a);
    --e;
  }
  for (; e > 0; --e) {
    for (auto& c : a) c *= lb;
  }
  return a;
}

Integer pow_int(Integer base, int e) {
  Integer out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

ZPoly div_exact_int(ZPoly a, const Integer& c) {
  for (auto& x : a) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (r != 0) throw std::domain_error("inexact integer division of polynomial");
    x /= c;
  }
  return a;
}
}  // namespace

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  strip(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) { return add(a, neg(b)); }

ZPoly neg(ZPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  strip(out);
  return out;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return a;
  return div_exact_int(a, content(a));
}

ZPoly div_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.empty()) return {};
  // Exact long division over Z from the top coefficient.
  ZPoly rem = a;
  ZPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
  const int db = degree(b);
  while (!rem.empty() && degree(rem) >= db) {
    const int shift = degree(rem) - db;
    Integer c, r;
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                b.back().get_mpz_t());
    if (r != 0) throw std::domain_error("inexact polynomial division");
    quot[shift] = c;
    for (int j = 0; j <= db; ++j) rem[j + shift] -= c * b[j];
    strip(rem);
  }
  if (!rem.empty()) throw std::domain_error("inexact polynomial division");
  strip(quot);
  return quot;
}

ZPoly gcd(ZPoly a, ZPoly b) {
  if (a.empty()) std::swap(a, b);
  if (b.empty()) {
    a = primitive_part(a);
    if (!a.empty() && a.back() < 0) a = neg(a);
    return a;
  }
  if (degree(a) < degree(b)) std::swap(a, b);
  const Integer cont = [&] {
    Integer g;
    Integer ca = content(a), cb = content(b);
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return g;
  }();
  a = primitive_part(a);
  b = primitive_part(b);
  // Subresultant polynomial remainder sequence.
  Integer g = 1, h = 1;
  for (;;) {
    const int delta = degree(a) - degree(b);
    ZPoly r = pseudo_rem(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) {
      b = ZPoly{Integer(1)};
      break;
    }
    a = std::move(b);
    b = div_exact_int(r, g * pow_int(h, delta));
    g = a.back();
    if (delta > 0) {
      // h <- g^delta / h^(delta-1), exact by the subresultant theory.
      Integer gh = pow_int(g, delta);
      Integer hd = pow_int(h, delta - 1);
      Integer rres;
      mpz_fdiv_qr(h.get_mpz_t(), rres.get_mpz_t(), gh.get_mpz_t(), hd.get_mpz_t());
      if (rres != 0) throw std::logic_error("subresultant bookkeeping failure");
    }
  }
  b = primitive_part(b);
  if (!b.empty() && b.back() < 0) b = neg(b);
  // Restore the gcd of the contents.
  if (cont != 1) {
    for (auto& c : b) c *= cont;
  }
  return b;
}

}  // namespace zpoly

namespace {
int first_nonzero(const ZPoly& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

ZPoly shift_down(const ZPoly& a, int k) {
  return ZPoly(a.begin() + k, a.end());
}
}  // namespace

RatFunc RatFunc::normalized(Rational scale, int qexp, ZPoly num, ZPoly den) {
  RatFunc out;
  if (den.empty()) throw std::domain_error("rational function with zero denominator");
  if (scale == 0 || num.empty()) return out;  // canonical zero
  // Split off powers of q so both polynomials have nonzero constant term.
  const int vn = first_nonzero(num);
  const int vd = first_nonzero(den);
  if (vn > 0) num = shift_down(num, vn);
  if (vd > 0) den = shift_down(den, vd);
  qexp += vn - vd;
  // Move integer content into the rational scale.
  const Integer cn = zpoly::content(num);
  const Integer cd = zpoly::content(den);
  scale *= Rational(cn) / Rational(cd);
  num = zpoly::div_exact(num, ZPoly{cn});
  den = zpoly::div_exact(den, ZPoly{cd});
  // Cancel the polynomial gcd.
  ZPoly g = zpoly::gcd(num, den);
  if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
    num = zpoly::div_exact(num, g);
    den = zpoly::div_exact(den, g);
  }
  // Sign conventions: positive leading coefficients on both polynomials.
  if (den.back() < 0) {
    den = zpoly::neg(den);
    num = zpoly::neg(num);
  }
  if (num.back() < 0) {
    num = zpoly::neg(num);
    scale = -scale;
  }
  scale.canonicalize();
  if (scale == 0) return RatFunc();
  out.scale_ = std::move(scale);
  out.qexp_ = qexp;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

RatFunc::RatFunc(long constant) {
  if (constant != 0) {
    scale_ = constant;
  }
}

RatFunc::RatFunc(const Rational& constant) {
  if (constant != 0) {
    scale_ = constant;
    scale_.canonicalize();
  }
}

RatFunc::RatFunc(const Laurent& p) {
  if (p.is_zero()) return;
  // Common denominator of the coefficients.
  Integer lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    Integer d = c.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  const int lo = p.min_deg();
  ZPoly num(p.max_deg() - lo + 1, Integer(0));
  for (const auto& [e, c] : p.terms()) {
    num[e - lo] = Integer(c.get_num() * (lcm / c.get_den()));
  }
  *this = normalized(Rational(1, lcm), lo, std::move(num), ZPoly{Integer(1)});
}

RatFunc RatFunc::fraction(const Laurent& num, const Laurent& den) {
  return RatFunc(num) / RatFunc(den);
}

bool RatFunc::is_one() const {
  return scale_ == 1 && qexp_ == 0 && num_ == ZPoly{Integer(1)} &&
         den_ == ZPoly{Integer(1)};
}

bool RatFunc::is_laurent() const { return den_ == ZPoly{Integer(1)}; }

Laurent RatFunc::to_laurent() const {
  if (is_zero()) return {};
  if (!is_laurent()) throw std::domain_error("rational function is not Laurent");
  Laurent out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    out += Laurent::monomial(qexp_ + static_cast<int>(i), scale_ * Rational(num_[i]));
  }
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.scale_ = -out.scale_;
  return out;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return normalized(Rational(1) / scale_, -qexp_, den_, num_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel before multiplying to keep the degrees low.
  const ZPoly g1 = zpoly::gcd(a.num_, b.den_);
  const ZPoly g2 = zpoly::gcd(b.num_, a.den_);
  const ZPoly n1 = zpoly::div_exact(a.num_, g1);
  const ZPoly n2 = zpoly::div_exact(b.num_, g2);
  const ZPoly d1 = zpoly::div_exact(a.den_, g2);
  const ZPoly d2 = zpoly::div_exact(b.den_, g1);
  return RatFunc::normalized(a.scale_ * b.scale_, a.qexp_ + b.qexp_,
                             zpoly::mul(n1, n2), zpoly::mul(d1, d2));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int qe = std::min(a.qexp_, b.qexp_);
  // Integerize the two rational scales over a common denominator.
  const Integer ra = a.scale_.get_den(), rb = b.scale_.get_den();
  Integer lcm;
  mpz_lcm(lcm.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
  const Integer ma = a.scale_.get_num() * (lcm / ra);
  const Integer mb = b.scale_.get_num() * (lcm / rb);
  const ZPoly g = zpoly::gcd(a.den_, b.den_);
  const ZPoly da = zpoly::div_exact(a.den_, g);
  const ZPoly db = zpoly::div_exact(b.den_, g);
  auto q_shift = [](ZPoly p, int k) {
    if (p.empty() || k == 0) return p;
    ZPoly out(p.size() + k, Integer(0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i + k] = p[i];
    return out;
  };
  ZPoly ta = zpoly::mul(a.num_, db);
  for (auto& c : ta) c *= ma;
  ta = q_shift(std::move(ta), a.qexp_ - qe);
  ZPoly tb = zpoly::mul(b.num_, da);
  for (auto& c : tb) c *= mb;
  tb = q_shift(std::move(tb), b.qexp_ - qe);
  ZPoly num = zpoly::add(ta, tb);
  ZPoly den = zpoly::mul(da, zpoly::mul(g, db));
  return RatFunc::normalized(Rational(1, lcm), qe, std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

bool RatFunc::operator==(const RatFunc& rhs) const {
  return scale_ == rhs.scale_ && qexp_ == rhs.qexp_ && num_ == rhs.num_ &&
         den_ == rhs.den_;
}

std::string RatFunc::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  auto poly_str = [](const ZPoly& p) {
    std::ostringstream ps;
    bool first = true;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
      if (p[i] == 0) continue;
      Integer c = p[i];
      if (!first) {
        ps << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      } else if (c < 0) {
        ps << "-";
        c = -c;
      }
      if (i == 0 || c != 1) ps << c.get_str();
      if (i > 0 && c != 1) ps << "*";
      if (i == 1) ps << "q";
      if (i > 1) ps << "q^" << i;
      first = false;
    }
    return ps.str();
  };
  os << "(" << scale_.get_str() << ")";
  if (qexp_ != 0) os << "*q^" << qexp_;
  if (num_ != ZPoly{Integer(1)}) os << "*(" << poly_str(num_) << ")";
  if (!is_laurent()) os << "/(" << poly_str(den_) << ")";
  return os.str();
}

}  // namespace qsw
