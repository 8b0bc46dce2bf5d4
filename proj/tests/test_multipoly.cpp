#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "modaut/multipoly.hpp"

using namespace modaut;

namespace {
uint64_t rnd_state = 0x9E3779B9;
uint64_t rnd() {
  rnd_state ^= rnd_state << 13;
  rnd_state ^= rnd_state >> 7;
  rnd_state ^= rnd_state << 17;
  return rnd_state;
}

MonomialOrder lex_order(std::vector<int> perm) {
  MonomialOrder o;
  o.kind = MonomialOrder::lex;
  o.perm = std::move(perm);
  return o;
}

template <class D>
MPoly<D> rnd_poly(const D& d, const MonomialOrder& ord,
                  const std::vector<int>& vars, int terms, int maxdeg,
                  const std::function<typename D::Elem()>& coeff) {
  MPoly<D> f;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int v : vars) m.e[v] = rnd() % (maxdeg + 1);
    f.push_back(MTerm<D>{m, coeff()});
  }
  mp_normalize(d, ord, f);
  return f;
}

template <class D>
typename D::Elem mp_eval(const D& d, const MPoly<D>& f,
                         const std::vector<typename D::Elem>& xs) {
  typename D::Elem acc = d.zero();
  for (auto& t : f) {
    typename D::Elem v = t.c;
    for (size_t i = 0; i < xs.size(); ++i)
      for (unsigned k = 0; k < t.m.e[i]; ++k) v = d.mul(v, xs[i]);
    acc = d.add(acc, v);
  }
  return acc;
}
}  // namespace

TEST_CASE("arithmetic and orders") {
  RationalDom Q;
  for (auto kind : {MonomialOrder::lex, MonomialOrder::grevlex}) {
    MonomialOrder ord;
    ord.kind = kind;
    ord.perm = {0, 1};
    MPoly<RationalDom> x = mp_var(Q, 0), y = mp_var(Q, 1);
    auto s = mp_add(Q, x, y, ord);
    auto sq = mp_mul(Q, s, s, ord);
    // x^2 + 2xy + y^2
    REQUIRE(sq.size() == 3);
    CHECK(sq[0].m == mono_var(0, 2));
    CHECK(sq[1].m == mono_mul(mono_var(0), mono_var(1)));
    CHECK(sq[2].m == mono_var(1, 2));
    CHECK(sq[1].c == Rational(2));
    CHECK(mp_sub(Q, sq, sq, ord).empty());
  }
  // grevlex: total degree dominates; lex: leading variable dominates
  MonomialOrder gl;
  gl.kind = MonomialOrder::grevlex;
  gl.perm = {0, 1};
  CHECK(gl.cmp(mono_var(1, 3), mono_var(0, 2)) > 0);
  MonomialOrder lx = lex_order({0, 1});
  CHECK(lx.cmp(mono_var(1, 3), mono_var(0, 2)) < 0);
}

TEST_CASE("buchberger examples") {
  RationalDom Q;
  MonomialOrder ord = lex_order({0, 1});  // x > y
  MPoly<RationalDom> x = mp_var(Q, 0), y = mp_var(Q, 1);
  MPoly<RationalDom> one = mp_const(Q, Rational(1));

  // <x - y, y^2 - 1> is already a Groebner basis
  auto g1 = mp_sub(Q, x, y, ord);
  auto g2 = mp_sub(Q, mp_mul(Q, y, y, ord), one, ord);
  auto gb = buchberger(Q, ord, {g1, g2}).basis;
  REQUIRE(gb.size() == 2);
  CHECK(mp_eq(Q, gb[0], g2));
  CHECK(mp_eq(Q, gb[1], g1));

  // <x, 1 - x> is the unit ideal
  auto gu = buchberger(Q, ord, {x, mp_sub(Q, one, x, ord)}).basis;
  REQUIRE(gu.size() == 1);
  CHECK(mp_eq(Q, gu[0], one));

  // textbook example: <x^2 - y, x^3 - x> lex x > y
  auto h1 = mp_sub(Q, mp_mul(Q, x, x, ord), y, ord);
  auto h2 = mp_sub(Q, mp_mul(Q, mp_mul(Q, x, x, ord), x, ord), x, ord);
  auto gh = buchberger(Q, ord, {h1, h2}).basis;
  // ideal contains y^2 - y = (x^3-x)*x - (x^2-y)(x^2+y); reduced basis is
  // {y^2 - y, x*y - x, x^2 - y}
  REQUIRE(gh.size() == 3);
  auto yy = mp_sub(Q, mp_mul(Q, y, y, ord), y, ord);
  CHECK(mp_eq(Q, gh[0], yy));
  CHECK(normal_form(Q, ord, h1, gh).empty());
  CHECK(normal_form(Q, ord, h2, gh).empty());
}

TEST_CASE("groebner properties on random systems") {
  auto F7 = make_ext(7, 1);
  FFDom d{F7.get()};
  auto coeff = [&] { return ff_const(F7.get(), rnd() % 7); };
  for (int trial = 0; trial < 20; ++trial) {
    MonomialOrder ord;
    ord.kind = trial % 2 ? MonomialOrder::lex : MonomialOrder::grevlex;
    ord.perm = {0, 1, 2};
    std::vector<MPoly<FFDom>> gens;
    for (int i = 0; i < 3; ++i)
      gens.push_back(rnd_poly(d, ord, {0, 1, 2}, 4, 2,
                              std::function<FFElem()>(coeff)));
    auto gb = buchberger(d, ord, gens).basis;
    // every generator reduces to zero
    for (auto& g : gens) CHECK(normal_form(d, ord, g, gb).empty());
    // every S-polynomial reduces to zero
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j) {
        Monomial L = mono_lcm(gb[i][0].m, gb[j][0].m);
        auto s = mp_sub(
            d, mp_term_mul(d, gb[i], mono_div(L, gb[i][0].m), d.one()),
            mp_term_mul(d, gb[j], mono_div(L, gb[j][0].m), d.one()), ord);
        CHECK(normal_form(d, ord, s, gb).empty());
      }
    // generator order does not matter
    std::vector<MPoly<FFDom>> shuffled(gens.rbegin(), gens.rend());
    auto gb2 = buchberger(d, ord, shuffled).basis;
    REQUIRE(gb.size() == gb2.size());
    for (size_t i = 0; i < gb.size(); ++i) CHECK(mp_eq(d, gb[i], gb2[i]));
  }
}

TEST_CASE("cofactor tracking") {
  RationalDom Q;
  MonomialOrder ord = lex_order({0, 1});
  auto coeff = [&] { return Rational((long)(rnd() % 11) - 5); };
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<MPoly<RationalDom>> gens;
    for (int i = 0; i < 2; ++i)
      gens.push_back(rnd_poly(Q, ord, {0, 1}, 3, 2,
                              std::function<Rational()>(coeff)));
    auto res = buchberger(Q, ord, gens, true);
    REQUIRE(res.cofactors.size() == res.basis.size());
    for (size_t i = 0; i < res.basis.size(); ++i) {
      MPoly<RationalDom> acc;
      for (size_t j = 0; j < gens.size(); ++j)
        acc = mp_add(Q, acc, mp_mul(Q, res.cofactors[i][j], gens[j], ord), ord);
      CHECK(mp_eq(Q, acc, res.basis[i]));
    }
  }
}

TEST_CASE("eliminate") {
  RationalDom Q;
  // eliminate t from <x - t, y - t> -> <x - y>
  MonomialOrder ord = lex_order({2, 0, 1});  // t > x > y
  MPoly<RationalDom> x = mp_var(Q, 0), y = mp_var(Q, 1), t = mp_var(Q, 2);
  auto el = eliminate(Q, {mp_sub(Q, x, t, ord), mp_sub(Q, y, t, ord)}, {2},
                      {0, 1});
  REQUIRE(el.size() == 1);
  CHECK(mp_eq(Q, el[0], mp_sub(Q, x, y, ord)));
}

TEST_CASE("recursive conversion and resultant route") {
  RationalDom Q;
  MonomialOrder ord = lex_order({0, 1});  // a > b, vars 0=a 1=b
  MPoly<RationalDom> a = mp_var(Q, 0), b = mp_var(Q, 1);
  // res_a(a^2 - b, a - b) = b^2 - b
  auto f = mp_sub(Q, mp_mul(Q, a, a, ord), b, ord);
  auto g = mp_sub(Q, a, b, ord);
  PolyDom<RationalDom> P;
  auto rf = mp_to_recursive(f, 0, 1);
  auto rg = mp_to_recursive(g, 0, 1);
  auto r = resultant(P, rf, rg);
  CHECK(r == UniPoly<RationalDom>{0, -1, 1});
  // agrees with the elimination ideal
  auto el = eliminate(Q, {f, g}, {0}, {1});
  REQUIRE(el.size() == 1);
  MPoly<RationalDom> expect{MTerm<RationalDom>{mono_var(1, 2), 1},
                            MTerm<RationalDom>{mono_var(1), -1}};
  CHECK(mp_eq(Q, el[0], expect));
}

TEST_CASE("count_points basics") {
  auto F3 = make_ext(3, 1);
  FFDom d{F3.get()};
  MonomialOrder ord = lex_order({0});
  MPoly<FFDom> x = mp_var(d, 0);
  auto one = mp_const(d, ff_one(F3.get()));
  // x^2 - 1 over F_3: two points
  auto f = mp_sub(d, mp_mul(d, x, x, ord), one, ord);
  CHECK(count_points({f}, {0}, F3.get()) == 2);
  // x^2: one distinct point
  CHECK(count_points({mp_mul(d, x, x, ord)}, {0}, F3.get()) == 1);
  // x^2 + 1 over F_3: two conjugate points in F_9
  auto g = mp_add(d, mp_mul(d, x, x, ord), one, ord);
  CHECK(count_points({g}, {0}, F3.get()) == 2);
  // positive-dimensional: error
  MPoly<FFDom> zero;
  CHECK_THROWS_AS(count_points({zero}, {0}, F3.get()), std::domain_error);
}

TEST_CASE("count_points over extensions") {
  auto F3 = make_ext(3, 1);
  FFDom d{F3.get()};
  MonomialOrder ord = lex_order({1, 0});  // y > x
  MPoly<FFDom> x = mp_var(d, 0), y = mp_var(d, 1);
  auto one = mp_const(d, ff_one(F3.get()));
  // f(x) = (x^2+1)(x-1): roots +-i in F_9 and 1, so 3 x-values;
  // y^2 = x gives two y per nonzero x: 6 points total
  auto fx = mp_mul(d, mp_add(d, mp_mul(d, x, x, ord), one, ord),
                   mp_sub(d, x, one, ord), ord);
  auto gy = mp_sub(d, mp_mul(d, y, y, ord), x, ord);
  CHECK(count_points({fx, gy}, {0, 1}, F3.get()) == 6);

  auto F2 = make_ext(2, 1);
  FFDom d2{F2.get()};
  MPoly<FFDom> x2 = mp_var(d2, 0), y2 = mp_var(d2, 1);
  auto one2 = mp_const(d2, ff_one(F2.get()));
  // x^2+x+1 has the two F_4 points; y^2+y+x is separable: 4 points
  auto fx2 = mp_add(d2, mp_add(d2, mp_mul(d2, x2, x2, ord), x2, ord), one2, ord);
  auto gy2 = mp_add(d2, mp_add(d2, mp_mul(d2, y2, y2, ord), y2, ord), x2, ord);
  CHECK(count_points({fx2, gy2}, {0, 1}, F2.get()) == 4);
}

TEST_CASE("variety points satisfy the system") {
  auto F2 = make_ext(2, 1);
  FFDom d2{F2.get()};
  MonomialOrder ord = lex_order({1, 0});
  MPoly<FFDom> x = mp_var(d2, 0), y = mp_var(d2, 1);
  auto one = mp_const(d2, ff_one(F2.get()));
  auto fx = mp_add(d2, mp_add(d2, mp_mul(d2, x, x, ord), x, ord), one, ord);
  auto gy = mp_add(d2, mp_add(d2, mp_mul(d2, y, y, ord), y, ord), x, ord);
  auto V = variety_fp({fx, gy}, {0, 1}, F2.get());
  REQUIRE(V.points.size() == 4);
  CHECK(!V.truncated);
  FFDom dv{V.field.get()};
  for (auto& pt : V.points) {
    for (auto* g : {&fx, &gy}) {
      FFElem v = dv.zero();
      for (auto& t : *g) {
        FFElem term = embed(t.c, V.field.get());
        for (size_t i = 0; i < pt.size(); ++i)
          for (unsigned k = 0; k < t.m.e[i]; ++k) term = term * pt[i];
        v = v + term;
      }
      CHECK(v.is_zero());
    }
  }
  // all four points distinct
  for (size_t i = 0; i < V.points.size(); ++i)
    for (size_t j = i + 1; j < V.points.size(); ++j)
      CHECK(!(V.points[i][0] == V.points[j][0] &&
              V.points[i][1] == V.points[j][1]));
}

TEST_CASE("count_points matches brute force") {
  auto F3 = make_ext(3, 1);
  FFDom d{F3.get()};
  MonomialOrder ord = lex_order({1, 0});
  auto coeff = [&] { return ff_const(F3.get(), rnd() % 3); };
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 20; ++trial) {
    // guarantee zero-dimensionality with separable univariate confinements
    // x^9 - x and y^9 - y restrict to F_9 coordinates
    auto xp = [&](int v, unsigned k) {
      return MPoly<FFDom>{MTerm<FFDom>{mono_var(v, k), d.one()}};
    };
    auto cx = mp_sub(d, xp(0, 9), xp(0, 1), ord);
    auto cy = mp_sub(d, xp(1, 9), xp(1, 1), ord);
    auto extra = rnd_poly(d, ord, {0, 1}, 4, 2, std::function<FFElem()>(coeff));
    if (extra.empty()) continue;
    long cnt = count_points({cx, cy, extra}, {0, 1}, F3.get());
    // brute force over F_9
    auto F9 = make_ext(3, 2);
    long brute = 0;
    FFDom d9{F9.get()};
    for (auto& xv : enumerate(F9.get()))
      for (auto& yv : enumerate(F9.get())) {
        FFElem v = d9.zero();
        for (auto& t : extra) {
          FFElem term = embed(t.c, F9.get());
          for (unsigned k = 0; k < t.m.e[0]; ++k) term = term * xv;
          for (unsigned k = 0; k < t.m.e[1]; ++k) term = term * yv;
          v = v + term;
        }
        if (v.is_zero()) ++brute;
      }
    CHECK(cnt == brute);
    ++tested;
  }
  CHECK(tested == 20);
}

TEST_CASE("is_zero_dimensional") {
  RationalDom Q;
  MonomialOrder ord = lex_order({0, 1});
  MPoly<RationalDom> x = mp_var(Q, 0), y = mp_var(Q, 1);
  auto gb1 = buchberger(Q, ord,
                        {mp_mul(Q, x, x, ord), mp_mul(Q, y, y, ord)}).basis;
  CHECK(is_zero_dimensional(gb1, {0, 1}));
  auto gb2 = buchberger(Q, ord, {mp_sub(Q, x, y, ord)}).basis;
  CHECK(!is_zero_dimensional(gb2, {0, 1}));
}

TEST_CASE("reduce_mpoly") {
  RationalDom Q;
  MonomialOrder ord = lex_order({0, 1});
  MPoly<RationalDom> f{MTerm<RationalDom>{mono_var(0, 2), Rational(1, 2)},
                       MTerm<RationalDom>{mono_var(1), Rational(7)},
                       MTerm<RationalDom>{Monomial{}, Rational(-3)}};
  mp_normalize(Q, ord, f);
  auto F7 = make_ext(7, 1);
  auto r = reduce_mpoly(f, F7.get(), ord);
  // 1/2 = 4 mod 7; the 7y term vanishes; -3 = 4
  REQUIRE(r.size() == 2);
  CHECK(r[0].c == ff_const(F7.get(), 4));
  CHECK(r[0].m == mono_var(0, 2));
  CHECK(r[1].c == ff_const(F7.get(), 4));
}
