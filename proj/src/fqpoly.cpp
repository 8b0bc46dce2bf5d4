#include "modaut/fqpoly.hpp"

#include <stdexcept>

namespace modaut {
namespace fq {

void trim(FqVec& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

FqVec add(const FqVec& a, const FqVec& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const ExtField* F = a.front().F;
  FqVec r(std::max(a.size(), b.size()), ff_zero(F));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = r[i] + a[i];
    if (i < b.size()) r[i] = r[i] + b[i];
  }
  trim(r);
  return r;
}

FqVec sub(const FqVec& a, const FqVec& b) {
  if (b.empty()) return a;
  const ExtField* F = b.front().F;
  FqVec r(std::max(a.size(), b.size()), ff_zero(F));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = r[i] + a[i];
    if (i < b.size()) r[i] = r[i] - b[i];
  }
  trim(r);
  return r;
}

FqVec mul(const FqVec& a, const FqVec& b) {
  if (a.empty() || b.empty()) return {};
  const ExtField* F = a.front().F;
  FqVec r(a.size() + b.size() - 1, ff_zero(F));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

FqVec scal(const FqVec& a, const FFElem& c) {
  FqVec r(a.size(), c);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  trim(r);
  return r;
}

void divrem(const FqVec& a, const FqVec& b, FqVec& q, FqVec& r) {
  if (b.empty()) throw std::domain_error("fq::divrem: division by zero");
  const ExtField* F = b.front().F;
  r = a;
  trim(r);
  q.clear();
  int db = deg(b);
  if (deg(r) < db) return;
  q.assign(deg(r) - db + 1, ff_zero(F));
  FFElem linv = ff_inv(b.back());
  for (int i = deg(r); i >= db; --i) {
    if (r[i].is_zero()) continue;
    FFElem f = r[i] * linv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b[j];
  }
  trim(r);
  trim(q);
}

FqVec rem(const FqVec& a, const FqVec& b) {
  FqVec q, r;
  divrem(a, b, q, r);
  return r;
}

FqVec monic(FqVec a) {
  trim(a);
  if (a.empty()) return a;
  FFElem linv = ff_inv(a.back());
  for (auto& c : a) c = c * linv;
  return a;
}

FqVec gcd(FqVec a, FqVec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FqVec r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

FqVec deriv(const FqVec& a) {
  if (a.size() <= 1) return {};
  const ExtField* F = a.front().F;
  FqVec r(a.size() - 1, ff_zero(F));
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * ff_const(F, i % F->p());
  trim(r);
  return r;
}

FFElem eval(const FqVec& a, const FFElem& x) {
  FFElem v = ff_zero(x.F);
  for (size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

FqVec powmod(FqVec base, const BigInt& e, const FqVec& mod) {
  const ExtField* F = mod.front().F;
  FqVec r{ff_one(F)};
  base = rem(base, mod);
  if (e == 0) return r;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), mod);
  }
  return r;
}

FqVec from_fp(const ExtField* F, const FpVec& a) {
  FqVec r;
  r.reserve(a.size());
  for (auto v : a) r.push_back(ff_const(F, v));
  trim(r);
  return r;
}

FqVec x_poly(const ExtField* F) { return FqVec{ff_zero(F), ff_one(F)}; }

}  // namespace fq
}  // namespace modaut
