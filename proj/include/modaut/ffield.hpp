#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modaut/numbers.hpp"

namespace modaut {

// Prime field F_p with Barrett-reduced multiplication. All paper-relevant
// primes fit in 17 bits, so products fit comfortably in 64 bits.
struct Zp {
  uint64_t p = 0;
  uint64_t binv = 0;  // floor(2^64 / p)

  Zp() = default;
  explicit Zp(uint64_t pp) : p(pp), binv(pp ? ~uint64_t(0) / pp : 0) {}

  uint64_t reduce(uint64_t t) const {
    uint64_t q = (uint64_t)(((unsigned __int128)t * binv) >> 64);
    uint64_t r = t - q * p;
    if (r >= p) r -= p;
    return r;
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t neg(uint64_t a) const { return a ? p - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const { return reduce(a * b); }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

using FpVec = std::vector<uint64_t>;  // dense poly over F_p, low-to-high

// poly helpers over F_p (canonical: no trailing zeros)
namespace fp {
void trim(FpVec& a);
int deg(const FpVec& a);  // -1 for zero
FpVec add(const Zp& z, const FpVec& a, const FpVec& b);
FpVec sub(const Zp& z, const FpVec& a, const FpVec& b);
FpVec mul(const Zp& z, const FpVec& a, const FpVec& b);
FpVec scal(const Zp& z, const FpVec& a, uint64_t c);
void divrem(const Zp& z, const FpVec& a, const FpVec& b, FpVec& q, FpVec& r);
FpVec rem(const Zp& z, const FpVec& a, const FpVec& b);
FpVec gcd(const Zp& z, FpVec a, FpVec b);  // monic
FpVec monic(const Zp& z, FpVec a);
FpVec deriv(const Zp& z, const FpVec& a);
uint64_t eval(const Zp& z, const FpVec& a, uint64_t x);
FpVec powmod(const Zp& z, FpVec base, const BigInt& e, const FpVec& mod);
bool is_irreducible(const Zp& z, const FpVec& m);
FpVec least_irreducible(const Zp& z, unsigned k);  // lex-least monic, deg k
// Frobenius matrix of the ring F_p[t]/(m): row j = t^(p*j) mod m, length k
std::vector<FpVec> frob_matrix(const Zp& z, const FpVec& m);
FpVec apply_rows(const Zp& z, const std::vector<FpVec>& rows, const FpVec& v);
}  // namespace fp

struct ExtField;
using FieldPtr = std::shared_ptr<const ExtField>;

// F_{p^k} = F_p[t]/(mod). Element data lives in FFElem; the field holds the
// modulus plus lazily built Frobenius data.
struct ExtField {
  Zp zp;
  unsigned k = 1;
  FpVec mod;  // monic, degree k

  uint64_t p() const { return zp.p; }
  BigInt order() const { return pow_int(BigInt((unsigned long)zp.p), k); }

  // raw element ops; a, b, out are coefficient vectors of length k
  void emul(const uint64_t* a, const uint64_t* b, uint64_t* out,
            uint64_t* scratch) const;  // scratch: 2k-1 slots
  void esqr(const uint64_t* a, uint64_t* out, uint64_t* scratch) const;

  const std::vector<FpVec>& frobenius_rows() const;  // row j = t^(p*j) mod m

  mutable std::vector<FpVec> frob_rows_;
  mutable std::map<FpVec, FpVec> embed_cache_;  // src modulus -> chosen root
};

struct FFElem {
  const ExtField* F = nullptr;
  FpVec c;  // length k

  FFElem() = default;
  FFElem(const ExtField* f, FpVec cc) : F(f), c(std::move(cc)) {}

  bool is_zero() const {
    for (auto v : c)
      if (v) return false;
    return true;
  }
  std::string str() const;
};

FieldPtr make_ext(uint64_t p, unsigned k);  // cached, lex-least modulus
FieldPtr make_field_with_modulus(uint64_t p, FpVec mod, bool check = true);

FFElem ff_zero(const ExtField* F);
FFElem ff_one(const ExtField* F);
FFElem ff_const(const ExtField* F, uint64_t v);          // element of F_p
FFElem ff_from_poly(const ExtField* F, const FpVec& a);  // reduce mod modulus
FFElem ff_from_int(const ExtField* F, const BigInt& n);

FFElem operator+(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a, const FFElem& b);
FFElem operator-(const FFElem& a);
FFElem operator*(const FFElem& a, const FFElem& b);
FFElem operator/(const FFElem& a, const FFElem& b);
bool operator==(const FFElem& a, const FFElem& b);
inline bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }
bool elem_less(const FFElem& a, const FFElem& b);  // coefficient order

FFElem ff_inv(const FFElem& a);
FFElem ff_pow(const FFElem& a, const BigInt& e);
FFElem frobenius(const FFElem& a);                  // x -> x^p
std::optional<FFElem> ff_sqrt(const FFElem& a);     // Tonelli-Shanks / char 2
std::vector<FFElem> enumerate(const ExtField* F, uint64_t cap = 1ull << 24);

// Image of e under the canonical embedding into target (degrees must divide).
FFElem embed(const FFElem& e, const ExtField* target);

// Minimal polynomial of e over F_p.
FpVec minimal_polynomial(const FFElem& e);

// All roots in T of an irreducible F_p-polynomial g with deg g | deg T,
// ordered by elem_less. Uses Frobenius-orbit generation from one root.
std::vector<FFElem> roots_in_field(const FpVec& g, const ExtField* T);

}  // namespace modaut
