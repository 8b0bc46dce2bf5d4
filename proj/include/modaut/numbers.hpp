#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modaut {

using BigInt = mpz_class;
using Rational = mpq_class;

struct Factorization {
  // primes strictly increasing, exponents >= 1
  std::vector<std::pair<BigInt, unsigned>> factors;

  BigInt value() const {
    BigInt v = 1;
    for (auto& [p, e] : factors)
      for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
  }
  std::string str() const;
};

// Miller-Rabin: deterministic witness set below 3.3e24, 64 random rounds above.
bool is_prime(const BigInt& n);

// |n| = product of prime powers; n must be nonzero.
Factorization factor_int(const BigInt& n);

inline BigInt numerator(const Rational& q) { return q.get_num(); }
inline BigInt denominator(const Rational& q) { return q.get_den(); }

BigInt pow_int(const BigInt& base, unsigned e);

// Exact integer k-th root if it exists.
bool int_kth_root(const BigInt& n, unsigned k, BigInt& out);

// Exact rational k-th root if it exists (for odd k handles negatives).
bool rat_kth_root(const Rational& q, unsigned k, Rational& out);

inline Rational rat_pow(const Rational& q, long e) {
  Rational r = 1, b = q;
  unsigned long a = e < 0 ? -e : e;
  if (e < 0) b = 1 / b;
  while (a) {
    if (a & 1) r *= b;
    b *= b;
    a >>= 1;
  }
  return r;
}

}  // namespace modaut
