#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "modaut/ffield.hpp"
#include "modaut/fqpoly.hpp"

using namespace modaut;

namespace {
uint64_t rnd_state = 0xDEADBEEF;
uint64_t rnd() {
  rnd_state ^= rnd_state << 13;
  rnd_state ^= rnd_state >> 7;
  rnd_state ^= rnd_state << 17;
  return rnd_state;
}

FFElem rnd_elem(const ExtField* F) {
  FpVec c(F->k);
  for (auto& v : c) v = rnd() % F->p();
  return FFElem(F, c);
}
}  // namespace

TEST_CASE("make_ext deterministic moduli") {
  auto F17 = make_ext(17, 1);
  CHECK(F17->mod == FpVec{0, 1});
  auto F4 = make_ext(2, 2);
  CHECK(F4->mod == FpVec{1, 1, 1});  // x^2 + x + 1
  auto F256 = make_ext(2, 8);
  CHECK(F256->k == 8);
  CHECK(F256->order() == 256);
  CHECK(make_ext(2, 8).get() == F256.get());  // cached, identical
  CHECK_THROWS_AS(make_ext(15, 1), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{
           {2, 1}, {2, 8}, {3, 4}, {17, 1}, {7, 2}, {101, 3}}) {
    auto F = make_ext(p, k);
    for (int i = 0; i < 50; ++i) {
      FFElem a = rnd_elem(F.get()), b = rnd_elem(F.get()), c = rnd_elem(F.get());
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      if (!a.is_zero()) {
        CHECK(a * ff_inv(a) == ff_one(F.get()));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("frobenius is a field hom") {
  auto F = make_ext(5, 4);
  for (int i = 0; i < 100; ++i) {
    FFElem a = rnd_elem(F.get()), b = rnd_elem(F.get());
    CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
    CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
    CHECK(frobenius(a) == ff_pow(a, 5));
  }
}

TEST_CASE("ff_sqrt") {
  auto F17 = make_ext(17, 1);
  auto r = ff_sqrt(ff_const(F17.get(), 2));
  REQUIRE(r);
  CHECK((r->c[0] == 6 || r->c[0] == 11));
  CHECK(ff_sqrt(ff_zero(F17.get()))->is_zero());
  CHECK(!ff_sqrt(ff_const(F17.get(), 3)));  // 3 is a non-residue mod 17

  // char 2: always exists, r = e^(2^(k-1))
  auto F256 = make_ext(2, 8);
  for (int i = 0; i < 50; ++i) {
    FFElem e = rnd_elem(F256.get());
    auto s = ff_sqrt(e);
    REQUIRE(s);
    CHECK(*s * *s == e);
  }
  // odd char extension fields, both residues and non-residues
  for (auto [p, k] : std::vector<std::pair<uint64_t, unsigned>>{{3, 3}, {13, 2}, {7, 4}}) {
    auto F = make_ext(p, k);
    int found = 0, missing = 0;
    for (int i = 0; i < 60; ++i) {
      FFElem e = rnd_elem(F.get());
      auto s = ff_sqrt(e);
      if (s) {
        CHECK(*s * *s == e);
        ++found;
      } else {
        CHECK(!(ff_pow(e, (F->order() - 1) / 2) == ff_one(F.get())));
        ++missing;
      }
    }
    CHECK(found > 0);
    CHECK(missing > 0);
  }
}

TEST_CASE("enumerate") {
  auto F2 = make_ext(2, 1);
  CHECK(enumerate(F2.get()).size() == 2);
  auto F256 = make_ext(2, 8);
  auto all = enumerate(F256.get());
  CHECK(all.size() == 256);
  std::sort(all.begin(), all.end(), elem_less);
  CHECK(std::unique(all.begin(), all.end()) == all.end());
  auto F17 = make_ext(17, 1);
  auto e17 = enumerate(F17.get());
  CHECK(e17.size() == 17);
  FFElem sum = ff_zero(F17.get());
  for (auto& e : e17) sum = sum + e;
  CHECK(sum.is_zero());
  auto big = make_ext(2, 30);
  CHECK_THROWS_AS(enumerate(big.get()), std::domain_error);
}

TEST_CASE("embed tower compatibility") {
  auto F2 = make_ext(2, 1);
  auto F4 = make_ext(2, 2);
  auto F16 = make_ext(2, 4);
  // generator of F4* keeps order 3 in F16
  FFElem g(F4.get(), FpVec{0, 1});
  FFElem img = embed(g, F16.get());
  CHECK(ff_pow(img, 3) == ff_one(F16.get()));
  CHECK(!(img == ff_one(F16.get())));
  // identity embedding
  CHECK(embed(g, F4.get()) == g);
  // homomorphism on random samples
  for (int i = 0; i < 50; ++i) {
    FFElem a = rnd_elem(F4.get()), b = rnd_elem(F4.get());
    CHECK(embed(a + b, F16.get()) == embed(a, F16.get()) + embed(b, F16.get()));
    CHECK(embed(a * b, F16.get()) == embed(a, F16.get()) * embed(b, F16.get()));
  }
  // tower agreement F2 -> F4 -> F16 vs direct
  for (auto& e : enumerate(F2.get())) {
    CHECK(embed(embed(e, F4.get()), F16.get()) == embed(e, F16.get()));
  }
  // odd characteristic tower
  auto F3 = make_ext(3, 1);
  auto F9 = make_ext(3, 2);
  auto F81 = make_ext(3, 4);
  for (int i = 0; i < 30; ++i) {
    FFElem a = rnd_elem(F9.get());
    CHECK(embed(embed(a, F81.get()), F81.get()) == embed(a, F81.get()));
    CHECK(ff_pow(embed(a, F81.get()), 9) == embed(ff_pow(a, 9), F81.get()));
  }
  CHECK_THROWS_AS(embed(rnd_elem(F9.get()), F16.get()), std::domain_error);
}

TEST_CASE("roots_in_field and minimal polynomials") {
  // x^2+x+1 has two roots in F16
  auto F16 = make_ext(2, 4);
  auto roots = roots_in_field(FpVec{1, 1, 1}, F16.get());
  REQUIRE(roots.size() == 2);
  for (auto& r : roots) {
    CHECK((r * r + r + ff_one(F16.get())).is_zero());
    CHECK(minimal_polynomial(r) == FpVec{1, 1, 1});
  }
  // an irreducible cubic over F5 splits in F_{5^6}
  auto F5 = make_ext(5, 1);
  FpVec cubic{1, 1, 0, 1};  // x^3 + x + 1 over F5
  CHECK(fp::is_irreducible(F5->zp, cubic));
  auto T = make_ext(5, 6);
  auto r3 = roots_in_field(cubic, T.get());
  REQUIRE(r3.size() == 3);
  for (auto& r : r3) {
    FFElem v = ff_pow(r, 3) + r + ff_one(T.get());
    CHECK(v.is_zero());
  }
  CHECK(std::is_sorted(r3.begin(), r3.end(), elem_less));
}

TEST_CASE("fp polynomial helpers") {
  Zp z(7);
  FpVec a{1, 2, 3}, b{5, 1};
  FpVec q, r;
  fp::divrem(z, a, b, q, r);
  CHECK(fp::add(z, fp::mul(z, q, b), r) == a);
  CHECK(fp::gcd(z, FpVec{6, 5, 1}, FpVec{2, 3, 1}) == FpVec{2, 1});  // common root -2
  CHECK(fp::eval(z, a, 2) == (1 + 4 + 12) % 7);
  // is_irreducible spot checks
  CHECK(fp::is_irreducible(Zp(2), FpVec{1, 1, 1}));
  CHECK(!fp::is_irreducible(Zp(2), FpVec{1, 0, 1}));      // (x+1)^2
  CHECK(fp::is_irreducible(Zp(3), FpVec{2, 1, 0, 0, 1}));  // x^4+x+2
  CHECK(fp::least_irreducible(Zp(2), 2) == FpVec{1, 1, 1});
  CHECK(fp::least_irreducible(Zp(3), 2) == FpVec{1, 0, 1});
  CHECK(fp::least_irreducible(Zp(3), 4) == FpVec{1, 0, 1, 1, 1});
}

TEST_CASE("fq polynomial helpers") {
  auto F9 = make_ext(3, 2);
  FqVec a = fq::from_fp(F9.get(), FpVec{1, 2, 0, 1});
  FqVec b{rnd_elem(F9.get()), ff_one(F9.get())};
  FqVec q, r;
  fq::divrem(a, b, q, r);
  CHECK(fq::add(fq::mul(q, b), r) == a);
  FqVec g = fq::gcd(fq::mul(a, b), b);
  CHECK(fq::deg(g) == fq::deg(b));
}
