// Prime-field evaluation mode: the homomorphism Z[q,q^-1] -> F_p, q |-> c.
//
// Evaluation points are sampled deterministically from a seed with p > 2^30
// prime and c of multiplicative order exceeding 8n(m+1), which keeps the
// evaluation away from the root-of-unity degenerations that change ranks.
// Any division by zero downstream raises BadEvaluation; callers resample the
// point (at most five times) and retry.

#pragma once

#include "qsw/scalars/laurent.hpp"
#include "qsw/scalars/ratfunc.hpp"

#include <cstdint>
#include <stdexcept>

namespace qsw {

/// Raised when a prime-field evaluation degenerates (zero denominator or a
/// q-image whose order collides with the computation).  Retriable.
class BadEvaluation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of F_p.  Elements carry their modulus; mixing moduli throws.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;  // 0 marks a default-constructed placeholder zero

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  bool is_zero() const { return v == 0; }

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  friend Fp operator/(Fp a, Fp b);
  Fp operator-() const;
  Fp inverse() const;  // throws BadEvaluation on zero

  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }

  bool operator==(const Fp& rhs) const;
  bool operator!=(const Fp& rhs) const { return !(*this == rhs); }
};

Fp fp_pow(Fp base, long e);

/// Deterministic Miller-Rabin primality test, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The evaluation q |-> c in F_p.
struct EvalPoint {
  std::uint64_t p = 0;
  std::uint64_t c = 0;

  Fp operator()(const Laurent& f) const;
  Fp operator()(const RatFunc& f) const;  // throws BadEvaluation on den(c)=0
  Fp from_rational(const Rational& r) const;
  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
};

/// Samples the attempt-th evaluation point for the given seed: p a random
/// prime > 2^30 and c a unit with c^k != 1 for all 1 <= k <= 8n(m+1).
EvalPoint sample_eval_point(std::uint64_t seed, int m, int n, int attempt = 0);

/// Same sampling with the modulus fixed by the caller (still required to be
/// a prime > 2^30; throws std::invalid_argument otherwise); only the unit c
/// is drawn from the seed stream.
EvalPoint sample_eval_point_at_prime(std::uint64_t p, std::uint64_t seed,
                                     int m, int n, int attempt = 0);

}  // namespace qsw
