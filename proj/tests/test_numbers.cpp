#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modaut/numbers.hpp"
#include "modaut/quad.hpp"

using namespace modaut;

namespace {

uint64_t rnd_state = 0x12345678;
uint64_t rnd() {
  rnd_state ^= rnd_state << 13;
  rnd_state ^= rnd_state >> 7;
  rnd_state ^= rnd_state << 17;
  return rnd_state;
}

Rational rnd_rat() {
  long n = (long)(rnd() % 20001) - 10000;
  long d = (long)(rnd() % 9999) + 1;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("factor_int basics") {
  CHECK(factor_int(1).factors.empty());
  auto f = factor_int(14641);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == 11);
  CHECK(f.factors[0].second == 4);
  CHECK_THROWS_AS(factor_int(0), std::domain_error);
}

TEST_CASE("large prime certified") {
  BigInt big("60876058793276893");
  CHECK(is_prime(big));
  auto f = factor_int(big);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == big);
  CHECK(f.factors[0].second == 1);
  // square of the same prime (shape seen in resultant contents)
  auto f2 = factor_int(big * big);
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].second == 2);
}

TEST_CASE("factor_int recomposes") {
  for (int i = 0; i < 50; ++i) {
    BigInt n = BigInt((unsigned long)(rnd() % 1000000000 + 2));
    auto f = factor_int(n);
    CHECK(f.value() == n);
    for (auto& [p, e] : f.factors) CHECK(is_prime(p));
    for (size_t j = 1; j < f.factors.size(); ++j)
      CHECK(f.factors[j - 1].first < f.factors[j].first);
  }
  // negative input factors absolute value
  CHECK(factor_int(-12).value() == 12);
}

TEST_CASE("primality edge cases") {
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(51241));
  CHECK(!is_prime(BigInt("3215031751")));  // strong pseudoprime to 2,3,5,7
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));  // 2^127-1
}

TEST_CASE("quad_norm examples") {
  CHECK(quad_norm(QuadElem(2, 1, 0)) == 1);
  CHECK(quad_norm(QuadElem(2, 147, 104)) == -23);
  CHECK(quad_norm(QuadElem(-1, 140, 128)) == 35984);
}

TEST_CASE("quad_conjugate") {
  QuadElem i(-1, 0, 1);
  CHECK(quad_conjugate(i) == QuadElem(-1, 0, -1));
  QuadElem z(3, 3, 5);
  CHECK(quad_conjugate(quad_conjugate(z)) == z);
  QuadElem w(2, 147, 104);
  QuadElem prod = w * quad_conjugate(w);
  CHECK(prod.is_rational());
  CHECK(prod.a == quad_norm(w));
}

TEST_CASE("quad_norm multiplicative") {
  for (int d : {-1, 2, 3}) {
    for (int i = 0; i < 1000; ++i) {
      QuadElem x(d, rnd_rat(), rnd_rat());
      QuadElem y(d, rnd_rat(), rnd_rat());
      CHECK(quad_norm(x * y) == quad_norm(x) * quad_norm(y));
    }
  }
}

TEST_CASE("rational arithmetic exact") {
  for (int i = 0; i < 200; ++i) {
    Rational a = rnd_rat(), c = rnd_rat();
    CHECK((a + c) - c == a);
  }
}

TEST_CASE("quad division and field axioms") {
  QuadElem x(2, Rational(3, 7), Rational(-2, 5));
  QuadElem y(2, Rational(1, 3), Rational(4, 9));
  CHECK((x / y) * y == x);
  CHECK_THROWS_AS(x / QuadElem(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(x * QuadElem(3, 1, 1), std::domain_error);
}

TEST_CASE("quad roots") {
  // rational square root
  auto r = quad_sqrt(QuadElem(Rational(49, 9)));
  REQUIRE(r);
  CHECK(*r * *r == QuadElem(Rational(49, 9)));
  // sqrt(2) lives in Q(sqrt 2)
  auto s2 = quad_sqrt(QuadElem(2, 2, 0));
  REQUIRE(s2);
  CHECK(*s2 * *s2 == QuadElem(2, 2, 0));
  CHECK(!s2->is_rational());
  // sqrt of a genuine quadratic element: (1 + sqrt2)^2 = 3 + 2 sqrt2
  auto s = quad_sqrt(QuadElem(2, 3, 2));
  REQUIRE(s);
  CHECK(*s * *s == QuadElem(2, 3, 2));
  // cube root of (1 + sqrt2)^3 = 7 + 5 sqrt2
  auto c = quad_cbrt(QuadElem(2, 7, 5));
  REQUIRE(c);
  CHECK(*c * *c * *c == QuadElem(2, 7, 5));
  // 6th root
  QuadElem base(2, 1, 1);
  auto six = quad_kth_root(quad_pow(base, 6), 6);
  REQUIRE(six);
  CHECK(quad_pow(*six, 6) == quad_pow(base, 6));
  // no root cases
  CHECK(!quad_sqrt(QuadElem(2, 0, 1)));  // sqrt(sqrt 2) not in Q(sqrt 2)
  CHECK(!quad_cbrt(QuadElem(Rational(2))));
}

TEST_CASE("rat_kth_root") {
  Rational out;
  CHECK(rat_kth_root(Rational(27, 8), 3, out));
  CHECK(out == Rational(3, 2));
  CHECK(rat_kth_root(Rational(-27, 8), 3, out));
  CHECK(out == Rational(-3, 2));
  CHECK(!rat_kth_root(Rational(2), 2, out));
}

TEST_CASE("factorization string") {
  CHECK(factor_int(3528000).str() == "2^6*3^2*5^3*7^2");
}
