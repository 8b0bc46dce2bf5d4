#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modaut/unipoly.hpp"

using namespace modaut;

namespace {
uint64_t rnd_state = 0xABCDEF12;
uint64_t rnd() {
  rnd_state ^= rnd_state << 13;
  rnd_state ^= rnd_state >> 7;
  rnd_state ^= rnd_state << 17;
  return rnd_state;
}

// Sylvester-matrix resultant over Q as an independent oracle
Rational sylvester_resultant(const std::vector<Rational>& a,
                             const std::vector<Rational>& b) {
  int m = (int)a.size() - 1, n = (int)b.size() - 1;
  int N = m + n;
  std::vector<std::vector<Rational>> M(N, std::vector<Rational>(N, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
  // determinant by fraction-free-ish Gaussian elimination over Q
  Rational det = 1;
  for (int c = 0; c < N; ++c) {
    int piv = -1;
    for (int r = c; r < N; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      std::swap(M[piv], M[c]);
      det = -det;
    }
    det *= M[c][c];
    Rational inv = 1 / M[c][c];
    for (int r = c + 1; r < N; ++r) {
      if (M[r][c] == 0) continue;
      Rational f = M[r][c] * inv;
      for (int j = c; j < N; ++j) M[r][j] -= f * M[c][j];
    }
  }
  return det;
}

std::vector<Rational> rnd_qpoly(int deg) {
  std::vector<Rational> f(deg + 1);
  for (auto& c : f) c = Rational((long)(rnd() % 21) - 10);
  if (f.back() == 0) f.back() = 1;
  return f;
}
}  // namespace

TEST_CASE("discriminant basics") {
  RationalDom Q;
  // x^2 + 3x + 5 -> 9 - 20
  UniPoly<RationalDom> f{5, 3, 1};
  CHECK(discriminant(Q, f) == Rational(-11));
  // x^3 - x -> 4
  UniPoly<RationalDom> g{0, -1, 0, 1};
  CHECK(discriminant(Q, g) == Rational(4));
  CHECK_THROWS_AS(discriminant(Q, UniPoly<RationalDom>{7}), std::domain_error);
}

TEST_CASE("resultant matches Sylvester oracle") {
  RationalDom Q;
  for (int trial = 0; trial < 60; ++trial) {
    int da = 1 + rnd() % 6, db = 1 + rnd() % 6;
    auto a = rnd_qpoly(da), b = rnd_qpoly(db);
    CHECK(resultant(Q, a, b) == sylvester_resultant(a, b));
  }
}

TEST_CASE("resultant over polynomial coefficient domain") {
  // res_x(x^2 - t, x - t) = t^2 - t as a polynomial in t
  PolyDom<RationalDom> D;
  using E = UniPoly<RationalDom>;
  UniPoly<PolyDom<RationalDom>> A{E{0, -1}, E{}, E{1}};  // x^2 - t
  UniPoly<PolyDom<RationalDom>> B{E{0, -1}, E{1}};       // x - t
  E r = resultant(D, A, B);
  CHECK(r == E{0, -1, 1});
}

TEST_CASE("gcd vs discriminant") {
  RationalDom Q;
  for (int trial = 0; trial < 40; ++trial) {
    auto f = rnd_qpoly(2 + rnd() % 4);
    bool sq = pdeg(pgcd(Q, f, pderiv(Q, f))) == 0;
    CHECK(sq == (discriminant(Q, f) != 0));
    // force a multiple root
    auto g = pmul(Q, f, f);
    CHECK(discriminant(Q, g) == 0);
  }
}

TEST_CASE("reciprocal") {
  RationalDom Q;
  UniPoly<RationalDom> f37{1, 14, 35, 48, 35, 14, 1};
  CHECK(reciprocal(Q, f37) == f37);
  UniPoly<RationalDom> g{2, 3, 1};
  UniPoly<RationalDom> expect{Rational(1, 2), Rational(3, 2), 1};
  CHECK(reciprocal(Q, g) == expect);
  CHECK(reciprocal(Q, UniPoly<RationalDom>{5}) == UniPoly<RationalDom>{1});
  CHECK_THROWS_AS(reciprocal(Q, UniPoly<RationalDom>{0, 1}), std::domain_error);
  // involution after monic normalization
  for (int trial = 0; trial < 20; ++trial) {
    auto f = rnd_qpoly(3 + rnd() % 5);
    if (f[0] == 0) f[0] = 1;
    CHECK(reciprocal(Q, reciprocal(Q, f)) == pmonic(Q, f));
  }
}

TEST_CASE("factor_ff examples") {
  auto F2 = make_ext(2, 1);
  FqVec f = fq::from_fp(F2.get(), FpVec{0, 1, 0, 0, 1});  // x^4 + x
  auto facs = factor_ff(f);
  REQUIRE(facs.size() == 3);
  CHECK(fq::deg(facs[0].factor) == 1);
  CHECK(fq::deg(facs[1].factor) == 1);
  CHECK(fq::deg(facs[2].factor) == 2);
  // (x+1)^3 = x^3+x^2+x+1 over F_2 (this is q(x) of the N=37 char-2 model)
  auto cube = factor_ff(fq::from_fp(F2.get(), FpVec{1, 1, 1, 1}));
  REQUIRE(cube.size() == 1);
  CHECK(cube[0].mult == 3);
  CHECK(fq::deg(cube[0].factor) == 1);
}

TEST_CASE("factor_ff recomposes") {
  std::vector<FieldPtr> fields{make_ext(2, 1), make_ext(3, 1), make_ext(5, 1),
                               make_ext(7, 2)};
  for (auto& Fp : fields) {
    const ExtField* F = Fp.get();
    for (int trial = 0; trial < 200; ++trial) {
      int deg = 1 + rnd() % 8;
      FqVec f;
      for (int i = 0; i < deg; ++i) {
        FpVec c(F->k);
        for (auto& v : c) v = rnd() % F->p();
        f.emplace_back(F, std::move(c));
      }
      f.push_back(ff_one(F));  // monic of degree deg
      auto facs = factor_ff(f);
      FqVec prod{ff_one(F)};
      for (auto& fa : facs)
        for (unsigned i = 0; i < fa.mult; ++i) prod = fq::mul(prod, fa.factor);
      CHECK(prod == f);
    }
  }
}

TEST_CASE("splitting_field") {
  auto s1 = splitting_field(2, FpVec{1, 1, 1});
  CHECK(s1.field->k == 2);
  CHECK(s1.roots.size() == 2);
  auto s2 = splitting_field(17, FpVec{15, 0, 1});  // x^2 - 2
  CHECK(s2.field->k == 1);
  REQUIRE(s2.roots.size() == 2);
  CHECK(s2.roots[0].c[0] == 6);
  CHECK(s2.roots[1].c[0] == 11);
  // lcm of factor degrees: (x^2+x+1)(x^3+x+1) over F_2 splits in F_64
  FpVec f = fp::mul(Zp(2), FpVec{1, 1, 1}, FpVec{1, 1, 0, 1});
  auto s3 = splitting_field(2, f);
  CHECK(s3.field->k == 6);
  CHECK(s3.roots.size() == 5);
  for (auto& r : s3.roots) {
    FFElem v = ff_zero(s3.field.get());
    for (size_t i = f.size(); i-- > 0;)
      v = v * r + ff_const(s3.field.get(), f[i]);
    CHECK(v.is_zero());
  }
  // multiplicity preserved
  auto s4 = splitting_field(3, fp::mul(Zp(3), FpVec{1, 1}, FpVec{1, 1}));
  CHECK(s4.roots.size() == 2);
  CHECK(s4.roots[0] == s4.roots[1]);
}

TEST_CASE("transvectant basics") {
  RationalDom Q;
  auto F = homogenize(Q, UniPoly<RationalDom>{1, 2, 0, 5, -1, 3}, 5);
  auto G = homogenize(Q, UniPoly<RationalDom>{4, -3, 2, 1}, 5);
  // (F,F)^r = 0 for odd r
  for (int r : {1, 3, 5}) {
    auto T = transvectant(Q, F, F, r);
    for (auto& c : T.coeff) CHECK(c == 0);
  }
  // (F,G)^0 = F*G
  auto T0 = transvectant(Q, F, G, 0);
  auto P = bf_mul(Q, F, G);
  CHECK(T0.coeff == P.coeff);
  CHECK(T0.n == P.n);
  CHECK_THROWS_AS(transvectant(Q, F, G, 6), std::domain_error);
}

TEST_CASE("transvectant covariance") {
  RationalDom Q;
  for (int trial = 0; trial < 15; ++trial) {
    int n = 3 + rnd() % 4, m = 3 + rnd() % 4;
    auto f = rnd_qpoly(n), g = rnd_qpoly(m);
    auto F = homogenize(Q, f, n);
    auto G = homogenize(Q, g, m);
    Rational a((long)(rnd() % 7) - 3), b((long)(rnd() % 7) - 3);
    Rational c((long)(rnd() % 7) - 3), d((long)(rnd() % 7) - 3);
    Rational det = a * d - b * c;
    if (det == 0) continue;
    int r = 2;
    if (r > std::min(n, m)) continue;
    auto lhs = transvectant(Q, bf_compose(Q, F, a, b, c, d),
                            bf_compose(Q, G, a, b, c, d), r);
    auto rhs = bf_compose(Q, transvectant(Q, F, G, r), a, b, c, d);
    Rational scale = rat_pow(det, r);
    REQUIRE(lhs.n == rhs.n);
    for (int i = 0; i <= lhs.n; ++i) CHECK(lhs.coeff[i] == scale * rhs.coeff[i]);
  }
}

TEST_CASE("reduce_rational_poly") {
  Zp z(7);
  auto r = reduce_rational_poly(z, {Rational(1, 2), Rational(-3), Rational(10)});
  CHECK(r == FpVec{4, 4, 3});
  CHECK_THROWS_AS(reduce_rational_poly(z, {Rational(1, 7)}), std::domain_error);
}
