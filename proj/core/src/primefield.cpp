#include "qsw/scalars/primefield.hpp"

#include <random>

namespace qsw {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;  // p < 2^63 so no overflow
  return s >= p ? s - p : s;
}

u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
  u64 out = 1;
  a %= p;
  while (e) {
    if (e & 1) out = mulm(out, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return out;
}

void check_same_prime(const Fp& a, const Fp& b) {
  if (a.p != b.p) throw std::logic_error("mixed prime-field moduli");
}
}  // namespace

Fp operator+(Fp a, Fp b) {
  check_same_prime(a, b);
  return Fp{addm(a.v, b.v, a.p), a.p};
}

Fp operator-(Fp a, Fp b) {
  check_same_prime(a, b);
  return Fp{subm(a.v, b.v, a.p), a.p};
}

Fp operator*(Fp a, Fp b) {
  check_same_prime(a, b);
  return Fp{mulm(a.v, b.v, a.p), a.p};
}

Fp Fp::operator-() const { return Fp{v == 0 ? 0 : p - v, p}; }

Fp Fp::inverse() const {
  if (v == 0) throw BadEvaluation("division by zero in prime field");
  return Fp{powm(v, p - 2, p), p};
}

Fp operator/(Fp a, Fp b) {
  check_same_prime(a, b);
  return a * b.inverse();
}

bool Fp::operator==(const Fp& rhs) const {
  check_same_prime(*this, rhs);
  return v == rhs.v;
}

Fp fp_pow(Fp base, long e) {
  if (e < 0) return fp_pow(base.inverse(), -e);
  return Fp{powm(base.v, static_cast<u64>(e), base.p), base.p};
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % s == 0) return n == s;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These witnesses decide primality for every 64-bit integer.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulm(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Fp EvalPoint::from_rational(const Rational& r) const {
  const Integer num = r.get_num();
  const Integer den = r.get_den();
  const u64 dm = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (dm == 0) throw BadEvaluation("rational denominator vanishes mod p");
  const u64 nm = mpz_fdiv_ui(num.get_mpz_t(), p);
  return Fp{nm, p} / Fp{dm, p};
}

Fp EvalPoint::operator()(const Laurent& f) const {
  Fp out{0, p};
  for (const auto& [e, coeff] : f.terms()) {
    out += from_rational(coeff) * fp_pow(Fp{c, p}, e);
  }
  return out;
}

Fp EvalPoint::operator()(const RatFunc& f) const {
  if (f.is_zero()) return Fp{0, p};
  // Horner evaluation; mpz_fdiv_ui yields the representative in [0, p).
  auto eval_zpoly = [&](const ZPoly& poly) {
    Fp acc{0, p};
    const Fp cv{c, p};
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      acc = acc * cv + Fp{mpz_fdiv_ui(it->get_mpz_t(), p), p};
    }
    return acc;
  };
  const Fp den = eval_zpoly(f.den());
  if (den.is_zero()) throw BadEvaluation("denominator vanishes at evaluation point");
  return from_rational(f.scale()) * fp_pow(Fp{c, p}, f.qexp()) *
         eval_zpoly(f.num()) / den;
}

namespace {

// Draws a unit c of multiplicative order > 8n(m+1) from the given stream.
EvalPoint sample_unit(std::mt19937_64& rng, u64 p, int m, int n) {
  const long order_bound = 8L * n * (m + 1);
  std::uniform_int_distribution<u64> cdist(2, p - 2);
  for (int tries = 0; tries < 100000; ++tries) {
    const u64 c = cdist(rng);
    bool ok = true;
    u64 power = 1;
    for (long k = 1; k <= order_bound; ++k) {
      power = mulm(power, c, p);
      if (power == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return EvalPoint{p, c};
  }
  throw std::logic_error("failed to sample an evaluation unit");
}

std::mt19937_64 seeded_stream(std::uint64_t seed, int attempt) {
  return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL +
                         0x1000003ULL * attempt + 1);
}

}  // namespace

EvalPoint sample_eval_point(std::uint64_t seed, int m, int n, int attempt) {
  auto rng = seeded_stream(seed, attempt);
  const u64 lo = (1ULL << 30) + 1;
  const u64 hi = (1ULL << 31);
  std::uniform_int_distribution<u64> dist(lo, hi);
  u64 p = 0;
  for (int tries = 0; tries < 100000; ++tries) {
    u64 cand = dist(rng) | 1;
    if (is_prime_u64(cand)) {
      p = cand;
      break;
    }
  }
  if (p == 0) throw std::logic_error("failed to sample a prime");
  return sample_unit(rng, p, m, n);
}

EvalPoint sample_eval_point_at_prime(std::uint64_t p, std::uint64_t seed,
                                     int m, int n, int attempt) {
  if (p <= (1ULL << 30) || !is_prime_u64(p))
    throw std::invalid_argument(
        "sample_eval_point_at_prime: modulus must be a prime > 2^30");
  auto rng = seeded_stream(seed, attempt);
  return sample_unit(rng, p, m, n);
}

}  // namespace qsw
