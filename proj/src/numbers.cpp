#include "modaut/numbers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace modaut {

std::string Factorization::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [p, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

namespace {

BigInt powm(const BigInt& b, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// one Miller-Rabin round with witness a; true = "probably prime"
bool mr_round(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s) {
  if (a % n == 0) return true;
  BigInt x = powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                   29, 31, 37, 41, 43, 47, 53, 59};
  for (unsigned p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // deterministic witnesses valid below 3.317e24
  BigInt det_bound("3317044064679887385961981");
  if (n < det_bound) {
    for (unsigned a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
      if (!mr_round(n, a, d, s)) return false;
    return true;
  }
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEul);
  for (int i = 0; i < 64; ++i) {
    BigInt a = rng.get_z_range(n - 3) + 2;
    if (!mr_round(n, a, d, s)) return false;
  }
  return true;
}

namespace {

// Pollard rho with Brent cycle detection; n odd composite, not a prime power
// of a small prime. Returns a nontrivial factor.
BigInt rho_brent(const BigInt& n, unsigned long seed) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  while (true) {
    BigInt y = rng.get_z_range(n - 1) + 1;
    BigInt c = rng.get_z_range(n - 1) + 1;
    BigInt m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
      BigInt k = 0;
      while (k < r && g == 1) {
        ys = y;
        BigInt rk = r - k;
        BigInt lim = m < rk ? m : rk;
        for (BigInt i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          BigInt diff = x - y;
          if (diff < 0) diff = -diff;
          q = q * diff % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        BigInt diff = x - ys;
        if (diff < 0) diff = -diff;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
  }
}

void factor_rec(BigInt n, std::map<BigInt, unsigned>& acc, unsigned long seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n]++;
    return;
  }
  // perfect power check helps rho on squares
  for (unsigned k = 2; k <= 64; ++k) {
    BigInt r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      for (unsigned i = 0; i < k; ++i) factor_rec(r, acc, seed + 1);
      return;
    }
    if (r <= 1) break;
  }
  BigInt g = rho_brent(n, seed);
  factor_rec(g, acc, seed + 1);
  factor_rec(n / g, acc, seed + 1);
}

}  // namespace

Factorization factor_int(const BigInt& n) {
  if (n == 0) throw std::domain_error("factor_int: zero");
  BigInt m = abs(n);
  std::map<BigInt, unsigned> acc;
  for (BigInt p = 2; p < 1000000 && p * p <= m; p == 2 ? p = 3 : p += 2) {
    while (m % p == 0) {
      acc[p]++;
      m /= p;
    }
  }
  factor_rec(m, acc, 0x5EED);
  Factorization f;
  for (auto& [p, e] : acc) f.factors.emplace_back(p, e);
  return f;
}

BigInt pow_int(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool int_kth_root(const BigInt& n, unsigned k, BigInt& out) {
  if (n < 0 && k % 2 == 0) return false;
  BigInt r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (!exact) return false;
  out = r;
  return true;
}

bool rat_kth_root(const Rational& q, unsigned k, Rational& out) {
  BigInt nr, dr;
  if (!int_kth_root(numerator(q), k, nr)) return false;
  if (!int_kth_root(denominator(q), k, dr)) return false;
  out = Rational(nr, dr);
  out.canonicalize();
  return true;
}

}  // namespace modaut
