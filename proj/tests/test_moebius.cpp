#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "modaut/moebius.hpp"

using namespace modaut;

namespace {
uint64_t rnd_state = 0x5EEDC0DE;
uint64_t rnd() {
  rnd_state ^= rnd_state << 13;
  rnd_state ^= rnd_state >> 7;
  rnd_state ^= rnd_state << 17;
  return rnd_state;
}

FFElem rnd_elem(const ExtField* F) {
  FpVec c(F->k);
  for (auto& v : c) v = rnd() % F->p();
  return FFElem(F, std::move(c));
}

ProjPoint rnd_point(const ExtField* F) {
  if (rnd() % 8 == 0) return ProjPoint::infinity();
  return ProjPoint(rnd_elem(F));
}

PGLElem rnd_pgl(const ExtField* F) {
  while (true) {
    FFElem a = rnd_elem(F), b = rnd_elem(F), c = rnd_elem(F), d = rnd_elem(F);
    if (!(a * d - b * c).is_zero()) return PGLElem(a, b, c, d);
  }
}
}  // namespace

TEST_CASE("act basics") {
  auto Fp = make_ext(17, 1);
  const ExtField* F = Fp.get();
  PGLElem id = pgl_identity(F);
  for (int i = 0; i < 17; ++i) {
    ProjPoint p(ff_const(F, i));
    CHECK(act(id, p) == p);
  }
  CHECK(act(id, ProjPoint::infinity()) == ProjPoint::infinity());

  // x -> 1/x swaps 0 and inf
  PGLElem inv_x(ff_zero(F), ff_one(F), ff_one(F), ff_zero(F));
  CHECK(act(inv_x, ProjPoint(ff_zero(F))) == ProjPoint::infinity());
  CHECK(act(inv_x, ProjPoint::infinity()) == ProjPoint(ff_zero(F)));

  // x -> (9x-1)/(8x+9) over F_17 sends 0 to -1/9 = 15
  PGLElem m(ff_const(F, 9), ff_const(F, 16), ff_const(F, 8), ff_const(F, 9));
  CHECK(act(m, ProjPoint(ff_zero(F))) == ProjPoint(ff_const(F, 15)));
}

TEST_CASE("canonical scaling") {
  auto Fp = make_ext(7, 2);
  const ExtField* F = Fp.get();
  for (int trial = 0; trial < 100; ++trial) {
    PGLElem m = rnd_pgl(F);
    FFElem lam = rnd_elem(F);
    if (lam.is_zero()) continue;
    PGLElem scaled(m.a * lam, m.b * lam, m.c * lam, m.d * lam);
    CHECK(m == scaled);
    CHECK(!pgl_less(m, scaled));
    CHECK(!pgl_less(scaled, m));
  }
  CHECK_THROWS_AS(PGLElem(ff_one(F), ff_one(F), ff_one(F), ff_one(F)),
                  std::domain_error);
}

TEST_CASE("group operations") {
  auto Fp = make_ext(5, 2);
  const ExtField* F = Fp.get();
  for (int trial = 0; trial < 100; ++trial) {
    PGLElem m = rnd_pgl(F), n = rnd_pgl(F);
    CHECK(pgl_mul(m, pgl_inv(m)) == pgl_identity(F));
    CHECK(pgl_mul(pgl_inv(m), m) == pgl_identity(F));
    // composition order: (m n)(x) = m(n(x))
    ProjPoint p = rnd_point(F);
    CHECK(act(pgl_mul(m, n), p) == act(m, act(n, p)));
  }
}

TEST_CASE("from_triples") {
  auto Fp = make_ext(17, 1);
  const ExtField* F = Fp.get();
  ProjPoint z(ff_zero(F)), o(ff_one(F)), inf = ProjPoint::infinity();

  CHECK(from_triples({z, o, inf}, {z, o, inf}) == pgl_identity(F));
  PGLElem inv_x(ff_zero(F), ff_one(F), ff_one(F), ff_zero(F));
  CHECK(from_triples({z, o, inf}, {inf, o, z}) == inv_x);
  CHECK_THROWS_AS(from_triples({z, z, inf}, {z, o, inf}), std::domain_error);

  auto F49 = make_ext(7, 2);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<ProjPoint, 3> s, t;
    auto fill = [&](std::array<ProjPoint, 3>& a) {
      for (int i = 0; i < 3; ++i) {
        do {
          a[i] = rnd_point(F49.get());
        } while ((i > 0 && a[i] == a[0]) || (i > 1 && a[i] == a[1]));
      }
    };
    fill(s);
    fill(t);
    PGLElem m = from_triples(s, t);
    for (int i = 0; i < 3; ++i) CHECK(act(m, s[i]) == t[i]);
  }
}

TEST_CASE("pullback basics") {
  auto Fp = make_ext(17, 1);
  const ExtField* F = Fp.get();
  // identity: monic f, multiplier = lc(f), no drop
  FqVec f = fq::from_fp(F, FpVec{3, 0, 5, 2});
  auto pb = pullback(f, pgl_identity(F));
  CHECK(pb.fstar == fq::monic(f));
  CHECK(pb.multiplier == ff_const(F, 2));
  CHECK(!pb.degree_drop);

  // x -> 1/x with f(0) != 0: fstar is the reciprocal
  PGLElem inv_x(ff_zero(F), ff_one(F), ff_one(F), ff_zero(F));
  auto pr = pullback(f, inv_x);
  FqVec rec = f;
  std::reverse(rec.begin(), rec.end());
  CHECK(pr.fstar == fq::monic(rec));
  CHECK(!pr.degree_drop);

  // f = x - 1, M = [[1,1],[1,0]]: root 1 has c*rho = a, so the degree drops
  FqVec g{-ff_one(F), ff_one(F)};
  PGLElem m(ff_one(F), ff_one(F), ff_one(F), ff_zero(F));
  auto pd = pullback(g, m);
  CHECK(pd.degree_drop);
  CHECK(pd.fstar == FqVec{ff_one(F)});
  CHECK(pd.multiplier == ff_one(F));

  CHECK_THROWS_AS(pullback(FqVec{}, m), std::domain_error);
}

TEST_CASE("pullback roots are preimages") {
  auto Fp = make_ext(13, 1);
  const ExtField* F = Fp.get();
  for (int trial = 0; trial < 200; ++trial) {
    // f with known roots in F_13
    int deg = 2 + rnd() % 4;
    std::vector<FFElem> roots;
    FqVec f{ff_one(F)};
    for (int i = 0; i < deg; ++i) {
      FFElem r = rnd_elem(F);
      roots.push_back(r);
      f = fq::mul(f, FqVec{-r, ff_one(F)});
    }
    PGLElem m = rnd_pgl(F);
    auto pb = pullback(f, m);
    PGLElem mi = pgl_inv(m);
    std::vector<FFElem> expect;
    for (auto& r : roots) {
      ProjPoint q = act(mi, ProjPoint(r));
      if (!q.inf) expect.push_back(q.x);
    }
    CHECK(pb.degree_drop == (expect.size() < roots.size()));
    CHECK((int)expect.size() == fq::deg(pb.fstar));
    FqVec check{ff_one(F)};
    for (auto& e : expect) check = fq::mul(check, FqVec{-e, ff_one(F)});
    CHECK(pb.fstar == check);
    // defining identity: f((ax+b)/(cx+d)) (cx+d)^s = multiplier * fstar
    for (int xv = 0; xv < 13; ++xv) {
      FFElem x = ff_const(F, xv);
      FFElem den = m.c * x + m.d;
      if (den.is_zero()) continue;
      FFElem lhs = fq::eval(f, (m.a * x + m.b) / den);
      for (int i = 0; i < fq::deg(f); ++i) lhs = lhs * den;
      CHECK(lhs == pb.multiplier * fq::eval(pb.fstar, x));
    }
  }
}

TEST_CASE("pullback contravariance") {
  auto Fp = make_ext(7, 2);
  const ExtField* F = Fp.get();
  int done = 0;
  for (int trial = 0; done < 100 && trial < 2000; ++trial) {
    int deg = 2 + rnd() % 4;
    FqVec f;
    for (int i = 0; i < deg; ++i) f.push_back(rnd_elem(F));
    f.push_back(ff_one(F));
    PGLElem A = rnd_pgl(F), B = rnd_pgl(F);
    auto full = pullback(f, pgl_mul(A, B));
    auto first = pullback(f, A);
    if (first.degree_drop || full.degree_drop) continue;
    auto second = pullback(first.fstar, B);
    if (second.degree_drop) continue;
    CHECK(full.fstar == second.fstar);
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("char 2 pullback") {
  auto Fp = make_ext(2, 3);
  const ExtField* F = Fp.get();
  for (int trial = 0; trial < 100; ++trial) {
    FqVec f;
    int deg = 2 + rnd() % 3;
    for (int i = 0; i < deg; ++i) f.push_back(rnd_elem(F));
    f.push_back(ff_one(F));
    PGLElem m = rnd_pgl(F);
    auto pb = pullback(f, m);
    // evaluate the defining identity at all 8 field elements
    for (auto& x : enumerate(F)) {
      FFElem den = m.c * x + m.d;
      if (den.is_zero()) continue;
      FFElem lhs = fq::eval(f, (m.a * x + m.b) / den);
      for (int i = 0; i < deg; ++i) lhs = lhs * den;
      CHECK(lhs == pb.multiplier * fq::eval(pb.fstar, x));
    }
  }
}
