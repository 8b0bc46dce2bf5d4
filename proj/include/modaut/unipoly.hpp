#pragma once

#include <optional>
#include <vector>

#include "modaut/ffield.hpp"
#include "modaut/fqpoly.hpp"
#include "modaut/quad.hpp"

namespace modaut {

// Coefficient domains share a tiny interface so the polynomial algorithms can
// be written once: zero/one/add/sub/neg/mul/is_zero/eq plus divexact (exact
// division, which is multiplication by the inverse in a field).

struct RationalDom {
  using Elem = Rational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_field() const { return true; }
};

struct QuadDom {
  using Elem = QuadElem;
  Elem zero() const { return QuadElem(Rational(0)); }
  Elem one() const { return QuadElem(Rational(1)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_field() const { return true; }
};

struct FFDom {
  const ExtField* F = nullptr;
  using Elem = FFElem;
  Elem zero() const { return ff_zero(F); }
  Elem one() const { return ff_one(F); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_field() const { return true; }
};

// UniPoly: dense coefficients, low-to-high, no trailing zeros.
template <class D>
using UniPoly = std::vector<typename D::Elem>;

template <class D>
void ptrim(const D& d, UniPoly<D>& a) {
  while (!a.empty() && d.is_zero(a.back())) a.pop_back();
}

template <class E>
int pdeg(const std::vector<E>& a) {
  return (int)a.size() - 1;
}

template <class D>
UniPoly<D> padd(const D& d, const UniPoly<D>& a, const UniPoly<D>& b) {
  UniPoly<D> r(std::max(a.size(), b.size()), d.zero());
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = d.add(r[i], a[i]);
    if (i < b.size()) r[i] = d.add(r[i], b[i]);
  }
  ptrim(d, r);
  return r;
}

template <class D>
UniPoly<D> psub(const D& d, const UniPoly<D>& a, const UniPoly<D>& b) {
  UniPoly<D> r(std::max(a.size(), b.size()), d.zero());
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = d.add(r[i], a[i]);
    if (i < b.size()) r[i] = d.sub(r[i], b[i]);
  }
  ptrim(d, r);
  return r;
}

template <class D>
UniPoly<D> pmul(const D& d, const UniPoly<D>& a, const UniPoly<D>& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly<D> r(a.size() + b.size() - 1, d.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (d.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = d.add(r[i + j], d.mul(a[i], b[j]));
  }
  ptrim(d, r);
  return r;
}

template <class D>
UniPoly<D> pscal(const D& d, const UniPoly<D>& a, const typename D::Elem& c) {
  UniPoly<D> r = a;
  for (auto& x : r) x = d.mul(x, c);
  ptrim(d, r);
  return r;
}

template <class D>
typename D::Elem peval(const D& d, const UniPoly<D>& a,
                       const typename D::Elem& x) {
  typename D::Elem v = d.zero();
  for (size_t i = a.size(); i-- > 0;) v = d.add(d.mul(v, x), a[i]);
  return v;
}

template <class D>
UniPoly<D> pderiv(const D& d, const UniPoly<D>& a) {
  if (a.size() <= 1) return {};
  UniPoly<D> r(a.size() - 1, d.zero());
  for (size_t i = 1; i < a.size(); ++i) {
    typename D::Elem m = d.zero();
    for (size_t j = 0; j < i; ++j) m = d.add(m, d.one());
    r[i - 1] = d.mul(a[i], m);
  }
  ptrim(d, r);
  return r;
}

// division over a field domain
template <class D>
void pdivrem(const D& d, const UniPoly<D>& a, const UniPoly<D>& b,
             UniPoly<D>& q, UniPoly<D>& r) {
  if (b.empty()) throw std::domain_error("pdivrem: division by zero");
  r = a;
  ptrim(d, r);
  q.clear();
  int db = pdeg(b);
  if (pdeg(r) < db) return;
  q.assign(pdeg(r) - db + 1, d.zero());
  typename D::Elem linv = d.divexact(d.one(), b.back());
  for (int i = pdeg(r); i >= db; --i) {
    if (d.is_zero(r[i])) continue;
    typename D::Elem f = d.mul(r[i], linv);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j)
      r[i - db + j] = d.sub(r[i - db + j], d.mul(f, b[j]));
  }
  ptrim(d, r);
  ptrim(d, q);
}

template <class D>
UniPoly<D> pmonic(const D& d, UniPoly<D> a) {
  ptrim(d, a);
  if (a.empty()) return a;
  typename D::Elem linv = d.divexact(d.one(), a.back());
  for (auto& x : a) x = d.mul(x, linv);
  return a;
}

template <class D>
UniPoly<D> pgcd(const D& d, UniPoly<D> a, UniPoly<D> b) {
  ptrim(d, a);
  ptrim(d, b);
  while (!b.empty()) {
    UniPoly<D> q, r;
    pdivrem(d, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(d, std::move(a));
}

template <class D>
bool peq(const D& d, const UniPoly<D>& a, const UniPoly<D>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!d.eq(a[i], b[i])) return false;
  return true;
}

// Coefficients may themselves be polynomials over a field; this is what the
// iterated-resultant elimination route uses.
template <class D>
struct PolyDom {
  D base;
  using Elem = UniPoly<D>;
  Elem zero() const { return {}; }
  Elem one() const { return Elem{base.one()}; }
  Elem add(const Elem& a, const Elem& b) const { return padd(base, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return psub(base, a, b); }
  Elem neg(const Elem& a) const { return pscal(base, a, base.neg(base.one())); }
  Elem mul(const Elem& a, const Elem& b) const { return pmul(base, a, b); }
  Elem divexact(const Elem& a, const Elem& b) const {
    UniPoly<D> q, r;
    pdivrem(base, a, b, q, r);
    if (!r.empty()) throw std::domain_error("PolyDom: inexact division");
    return q;
  }
  bool is_zero(const Elem& a) const { return a.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return peq(base, a, b); }
  bool is_field() const { return false; }
};

// pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem
template <class D>
UniPoly<D> pprem(const D& d, UniPoly<D> a, const UniPoly<D>& b) {
  int db = pdeg(b);
  if (db < 0) throw std::domain_error("pprem: zero divisor");
  ptrim(d, a);
  int e = pdeg(a) - db + 1;
  const typename D::Elem& lb = b.back();
  while (pdeg(a) >= db) {
    int da = pdeg(a);
    UniPoly<D> shifted(da - db, d.zero());
    for (auto& c : b) shifted.push_back(c);
    // a = lb*a - la*x^(da-db)*b
    UniPoly<D> t = pscal(d, a, lb);
    UniPoly<D> u = pscal(d, shifted, a.back());
    a = psub(d, t, u);
    --e;
  }
  // normalize so the full power of lb is applied
  typename D::Elem mult = d.one();
  for (int i = 0; i < e; ++i) mult = d.mul(mult, lb);
  return pscal(d, a, mult);
}

template <class D>
typename D::Elem elem_pow(const D& d, const typename D::Elem& a, int e) {
  typename D::Elem r = d.one();
  for (int i = 0; i < e; ++i) r = d.mul(r, a);
  return r;
}

// Resultant via the subresultant PRS; exact over any integral domain with
// divexact. Validated against Sylvester determinants in the tests.
template <class D>
typename D::Elem resultant(const D& d, UniPoly<D> A, UniPoly<D> B) {
  ptrim(d, A);
  ptrim(d, B);
  if (A.empty() || B.empty()) return d.zero();
  bool negate = false;
  if (pdeg(A) < pdeg(B)) {
    if ((pdeg(A) % 2) && (pdeg(B) % 2)) negate = true;
    std::swap(A, B);
  }
  if (pdeg(B) == 0) {
    typename D::Elem r = elem_pow(d, B.back(), pdeg(A));
    return negate ? d.neg(r) : r;
  }
  typename D::Elem g = d.one(), h = d.one();
  bool sneg = false;
  while (pdeg(B) > 0) {
    int delta = pdeg(A) - pdeg(B);
    if ((pdeg(A) % 2) && (pdeg(B) % 2)) sneg = !sneg;
    UniPoly<D> R = pprem(d, A, B);
    A = std::move(B);
    if (R.empty()) return d.zero();  // deg A > 0 here, common factor
    typename D::Elem divisor = d.mul(g, elem_pow(d, h, delta));
    for (auto& c : R) c = d.divexact(c, divisor);
    B = std::move(R);
    g = A.back();
    if (delta > 0)
      h = delta == 1 ? g
                     : d.divexact(elem_pow(d, g, delta),
                                  elem_pow(d, h, delta - 1));
  }
  // res = s * B^{deg A} / h^{deg A - 1}
  typename D::Elem r =
      d.divexact(elem_pow(d, B.back(), pdeg(A)), elem_pow(d, h, pdeg(A) - 1));
  if (sneg) r = d.neg(r);
  return negate ? d.neg(r) : r;
}

template <class D>
typename D::Elem discriminant(const D& d, const UniPoly<D>& f) {
  int s = pdeg(f);
  if (s < 1) throw std::domain_error("discriminant: constant polynomial");
  typename D::Elem r = resultant(d, f, pderiv(d, f));
  r = d.divexact(r, f.back());
  if (((long)s * (s - 1) / 2) % 2) r = d.neg(r);
  return r;
}

// f*(x) = a0^{-1} x^s f(1/x)
template <class D>
UniPoly<D> reciprocal(const D& d, UniPoly<D> f) {
  ptrim(d, f);
  if (f.empty() || d.is_zero(f.front()))
    throw std::domain_error("reciprocal: f(0) = 0");
  std::reverse(f.begin(), f.end());
  return pmonic(d, std::move(f));
}

// ---- binary forms and transvectants ----

// f(x,y) homogeneous of degree n; coeff[i] multiplies x^i y^(n-i)
template <class D>
struct BinaryForm {
  int n = 0;
  std::vector<typename D::Elem> coeff;  // exactly n+1 entries
};

template <class D>
BinaryForm<D> homogenize(const D& d, const UniPoly<D>& f, int n) {
  if (pdeg(f) > n) throw std::domain_error("homogenize: degree exceeds n");
  BinaryForm<D> F;
  F.n = n;
  F.coeff.assign(n + 1, d.zero());
  for (size_t i = 0; i < f.size(); ++i) F.coeff[i] = f[i];
  return F;
}

// partial derivative d^(rx)/dx^(rx) d^(ry)/dy^(ry)
template <class D>
BinaryForm<D> bf_partial(const D& d, const BinaryForm<D>& F, int rx, int ry) {
  BinaryForm<D> G = F;
  for (int t = 0; t < rx; ++t) {
    BinaryForm<D> H;
    H.n = G.n - 1;
    if (H.n < 0) return BinaryForm<D>{0, {d.zero()}};
    H.coeff.assign(H.n + 1, d.zero());
    for (int i = 1; i <= G.n; ++i) {
      typename D::Elem m = d.zero();
      for (int j = 0; j < i; ++j) m = d.add(m, d.one());
      H.coeff[i - 1] = d.mul(G.coeff[i], m);
    }
    G = std::move(H);
  }
  for (int t = 0; t < ry; ++t) {
    BinaryForm<D> H;
    H.n = G.n - 1;
    if (H.n < 0) return BinaryForm<D>{0, {d.zero()}};
    H.coeff.assign(H.n + 1, d.zero());
    for (int i = 0; i < G.n; ++i) {
      int ypow = G.n - i;
      typename D::Elem m = d.zero();
      for (int j = 0; j < ypow; ++j) m = d.add(m, d.one());
      H.coeff[i] = d.mul(G.coeff[i], m);
    }
    G = std::move(H);
  }
  return G;
}

template <class D>
BinaryForm<D> bf_mul(const D& d, const BinaryForm<D>& F, const BinaryForm<D>& G) {
  BinaryForm<D> H;
  H.n = F.n + G.n;
  H.coeff.assign(H.n + 1, d.zero());
  for (int i = 0; i <= F.n; ++i)
    for (int j = 0; j <= G.n; ++j)
      H.coeff[i + j] = d.add(H.coeff[i + j], d.mul(F.coeff[i], G.coeff[j]));
  return H;
}

// (F,G)^r = sum_k (-1)^k binom(r,k) d^r F/dx^(r-k)dy^k * d^r G/dx^k dy^(r-k)
template <class D>
BinaryForm<D> transvectant(const D& d, const BinaryForm<D>& F,
                           const BinaryForm<D>& G, int r) {
  if (r > F.n || r > G.n) throw std::domain_error("transvectant: r too large");
  BinaryForm<D> acc;
  acc.n = F.n + G.n - 2 * r;
  acc.coeff.assign(acc.n + 1, d.zero());
  BigInt binom = 1;
  for (int k = 0; k <= r; ++k) {
    if (k > 0) binom = binom * (r - k + 1) / k;
    BinaryForm<D> A = bf_partial(d, F, r - k, k);
    BinaryForm<D> B = bf_partial(d, G, k, r - k);
    BinaryForm<D> P = bf_mul(d, A, B);
    typename D::Elem m = d.zero();
    BigInt bb = binom;
    // scalar = binom as a domain element
    typename D::Elem one = d.one();
    for (BigInt t = 0; t < bb; ++t) m = d.add(m, one);
    if (k % 2) m = d.neg(m);
    for (int i = 0; i <= acc.n; ++i)
      acc.coeff[i] = d.add(acc.coeff[i], d.mul(m, P.coeff[i]));
  }
  return acc;
}

// substitute (x,y) -> (a x + b y, c x + d y)
template <class D>
BinaryForm<D> bf_compose(const D& dom, const BinaryForm<D>& F,
                         const typename D::Elem& a, const typename D::Elem& b,
                         const typename D::Elem& c, const typename D::Elem& d) {
  BinaryForm<D> acc;
  acc.n = F.n;
  acc.coeff.assign(F.n + 1, dom.zero());
  // powers of (a x + b y) and (c x + d y)
  std::vector<BinaryForm<D>> xp(F.n + 1), yp(F.n + 1);
  BinaryForm<D> one{0, {dom.one()}};
  xp[0] = yp[0] = one;
  // coeff[i] multiplies x^i y^(n-i): the linear form a x + b y is {b, a}
  BinaryForm<D> lx{1, {b, a}};
  BinaryForm<D> ly{1, {d, c}};
  for (int i = 1; i <= F.n; ++i) {
    xp[i] = bf_mul(dom, xp[i - 1], lx);
    yp[i] = bf_mul(dom, yp[i - 1], ly);
  }
  for (int i = 0; i <= F.n; ++i) {
    if (dom.is_zero(F.coeff[i])) continue;
    BinaryForm<D> term = bf_mul(dom, xp[i], yp[F.n - i]);
    for (int j = 0; j <= F.n; ++j)
      acc.coeff[j] = dom.add(acc.coeff[j], dom.mul(F.coeff[i], term.coeff[j]));
  }
  return acc;
}

// ---- finite-field factorization (implemented in unipoly.cpp) ----

struct FFFactor {
  FqVec factor;  // monic irreducible
  unsigned mult = 1;
};

// Distinct-degree then equal-degree splitting; deterministic (fixed seed).
std::vector<FFFactor> factor_ff(const FqVec& f);

struct SplitField {
  FieldPtr field;                                  // degree lcm of factors
  std::vector<FFElem> roots;                       // with multiplicity, sorted
  std::vector<std::pair<FpVec, unsigned>> factors;  // over F_p, sorted
};

// Splitting field of a nonzero polynomial over F_p.
SplitField splitting_field(uint64_t p, const FpVec& f);

// helpers shared with other modules
FpVec reduce_rational_poly(const Zp& z, const std::vector<Rational>& f);

}  // namespace modaut
