#include "modaut/unipoly.hpp"

#include <algorithm>
#include <numeric>

namespace modaut {

namespace {

struct XorShift {
  uint64_t s;
  explicit XorShift(uint64_t seed) : s(seed ? seed : 1) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

FqVec random_poly(const ExtField* F, int degree_lt, XorShift& rng) {
  FqVec t;
  for (int i = 0; i < degree_lt; ++i) {
    FpVec c(F->k);
    for (auto& v : c) v = rng.next() % F->p();
    t.emplace_back(F, std::move(c));
  }
  fq::trim(t);
  return t;
}

// p-th root of a polynomial all of whose exponents are divisible by p
FqVec pth_root(const FqVec& f) {
  const ExtField* F = f.front().F;
  uint64_t p = F->p();
  BigInt e = F->order() / BigInt((unsigned long)p);  // c -> c^(q/p) inverts ^p
  FqVec r;
  for (size_t i = 0; i < f.size(); i += p) r.push_back(ff_pow(f[i], e));
  fq::trim(r);
  return r;
}

void equal_degree(FqVec h, int d, unsigned mult, std::vector<FFFactor>& out,
                  XorShift& rng) {
  const ExtField* F = h.front().F;
  if (fq::deg(h) == d) {
    out.push_back({fq::monic(std::move(h)), mult});
    return;
  }
  BigInt q = F->order();
  while (true) {
    FqVec t = random_poly(F, fq::deg(h), rng);
    if (fq::deg(t) < 1 && (t.empty() || t[0].is_zero())) continue;
    FqVec g;
    if (F->p() == 2) {
      // trace map over F_{2^(k*d)}
      size_t m = (size_t)F->k * d;
      FqVec s = t, acc = t;
      for (size_t i = 1; i < m; ++i) {
        s = fq::rem(fq::mul(s, s), h);
        acc = fq::add(acc, s);
      }
      g = fq::gcd(acc, h);
    } else {
      BigInt e = (pow_int(q, d) - 1) / 2;
      FqVec u = fq::powmod(t, e, h);
      if (!u.empty())
        u[0] = u[0] - ff_one(F);
      else
        u = FqVec{-ff_one(F)};
      fq::trim(u);
      g = fq::gcd(u, h);
    }
    int dg = fq::deg(g);
    if (dg <= 0 || dg == fq::deg(h)) continue;
    FqVec quo, r;
    fq::divrem(h, g, quo, r);
    equal_degree(std::move(g), d, mult, out, rng);
    equal_degree(fq::monic(std::move(quo)), d, mult, out, rng);
    return;
  }
}

void distinct_degree(FqVec g, unsigned mult, std::vector<FFFactor>& out,
                     XorShift& rng) {
  const ExtField* F = g.front().F;
  BigInt q = F->order();
  FqVec xq = fq::x_poly(F);
  int d = 0;
  while (fq::deg(g) > 0) {
    ++d;
    if (2 * d > fq::deg(g)) {
      out.push_back({fq::monic(std::move(g)), mult});
      return;
    }
    xq = fq::powmod(xq, q, g);
    FqVec diff = fq::sub(xq, fq::x_poly(F));
    FqVec h = fq::gcd(diff, g);
    if (fq::deg(h) > 0) {
      equal_degree(h, d, mult, out, rng);
      FqVec quo, r;
      fq::divrem(g, h, quo, r);
      g = fq::monic(std::move(quo));
      xq = fq::rem(xq, g);
    }
  }
}

void squarefree_rec(FqVec f, unsigned mult, std::vector<FFFactor>& out,
                    XorShift& rng) {
  const ExtField* F = f.front().F;
  uint64_t p = F->p();
  if (fq::deg(f) == 0) return;
  FqVec fd = fq::deriv(f);
  if (fd.empty()) {
    squarefree_rec(pth_root(f), mult * (unsigned)p, out, rng);
    return;
  }
  FqVec c = fq::gcd(f, fd);
  FqVec w, r;
  fq::divrem(f, c, w, r);
  w = fq::monic(std::move(w));
  unsigned i = 1;
  while (fq::deg(w) > 0) {
    FqVec y = fq::gcd(w, c);
    FqVec zq, zr;
    fq::divrem(w, y, zq, zr);
    if (fq::deg(zq) > 0) distinct_degree(fq::monic(zq), mult * i, out, rng);
    w = std::move(y);
    FqVec cq, cr;
    fq::divrem(c, w, cq, cr);
    c = fq::monic(std::move(cq));
    ++i;
  }
  if (fq::deg(c) > 0) squarefree_rec(pth_root(c), mult * (unsigned)p, out, rng);
}

bool fq_coeffs_less(const FqVec& a, const FqVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].c != b[i].c) return a[i].c < b[i].c;
  }
  return false;
}

}  // namespace

std::vector<FFFactor> factor_ff(const FqVec& f_in) {
  FqVec f = f_in;
  fq::trim(f);
  if (f.empty()) throw std::domain_error("factor_ff: zero polynomial");
  if (fq::deg(f) == 0) return {};
  const ExtField* F = f.front().F;
  f = fq::monic(std::move(f));
  XorShift rng(0xFAC70B1A5ull ^ (F->p() << 20) ^ F->k);
  std::vector<FFFactor> out;
  squarefree_rec(std::move(f), 1, out, rng);
  std::sort(out.begin(), out.end(), [](const FFFactor& a, const FFFactor& b) {
    if (a.factor.size() != b.factor.size())
      return a.factor.size() < b.factor.size();
    if (a.mult != b.mult) return a.mult < b.mult;
    return fq_coeffs_less(a.factor, b.factor);
  });
  return out;
}

SplitField splitting_field(uint64_t p, const FpVec& f_in) {
  FpVec f = f_in;
  fp::trim(f);
  if (f.empty()) throw std::domain_error("splitting_field: zero polynomial");
  FieldPtr base = make_ext(p, 1);
  FqVec fq_poly = fq::from_fp(base.get(), f);
  auto facs = factor_ff(fq_poly);

  SplitField out;
  unsigned k = 1;
  for (auto& fa : facs) {
    FpVec g;
    for (auto& c : fa.factor) g.push_back(c.c[0]);
    fp::trim(g);
    out.factors.emplace_back(std::move(g), fa.mult);
    k = std::lcm(k, (unsigned)(out.factors.back().first.size() - 1));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.size() != b.first.size())
                return a.first.size() < b.first.size();
              if (a.first != b.first) return a.first < b.first;
              return a.second < b.second;
            });
  // prefer an existing factor of full degree as the modulus: it is free and
  // deterministic given f
  const FpVec* modulus = nullptr;
  for (auto& [g, mult] : out.factors) {
    if (g.size() - 1 == k) {
      modulus = &g;
      break;
    }
  }
  if (modulus)
    out.field = make_field_with_modulus(p, *modulus, false);
  else
    out.field = make_ext(p, k);

  for (auto& [g, mult] : out.factors) {
    auto roots = roots_in_field(g, out.field.get());
    for (auto& r : roots)
      for (unsigned i = 0; i < mult; ++i) out.roots.push_back(r);
  }
  std::stable_sort(out.roots.begin(), out.roots.end(), elem_less);
  return out;
}

FpVec reduce_rational_poly(const Zp& z, const std::vector<Rational>& f) {
  FpVec out;
  for (auto& q : f) {
    BigInt den = denominator(q) % BigInt((unsigned long)z.p);
    if (den == 0)
      throw std::domain_error("reduce_rational_poly: p divides a denominator");
    BigInt num = numerator(q) % BigInt((unsigned long)z.p);
    if (num < 0) num += BigInt((unsigned long)z.p);
    out.push_back(z.mul(num.get_ui(), z.inv(den.get_ui())));
  }
  fp::trim(out);
  return out;
}

}  // namespace modaut
