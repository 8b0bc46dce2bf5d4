#include "modaut/quad.hpp"

#include <algorithm>
#include <sstream>

namespace modaut {

std::string QuadElem::str() const {
  std::ostringstream os;
  if (b == 0) {
    os << a.get_str();
  } else {
    Rational ab = abs(b);
    os << a.get_str() << (b > 0 ? "+" : "-") << ab.get_str() << "*sqrt("
       << d << ")";
  }
  return os.str();
}

int join_tag(int d1, int d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw std::domain_error("QuadElem: mixing different quadratic fields");
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  return QuadElem(join_tag(x.d, y.d), x.a + y.a, x.b + y.b);
}
QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  return QuadElem(join_tag(x.d, y.d), x.a - y.a, x.b - y.b);
}
QuadElem operator-(const QuadElem& x) { return QuadElem(x.d, -x.a, -x.b); }
QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  int d = join_tag(x.d, y.d);
  return QuadElem(d, x.a * y.a + Rational(d) * x.b * y.b,
                  x.a * y.b + x.b * y.a);
}
QuadElem operator/(const QuadElem& x, const QuadElem& y) {
  if (y.is_zero()) throw std::domain_error("QuadElem: division by zero");
  Rational n = quad_norm(y);
  QuadElem t = x * quad_conjugate(y);
  return QuadElem(join_tag(x.d, y.d), t.a / n, t.b / n);
}
bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.a != y.a || x.b != y.b) return false;
  if (x.b != 0 && x.d != y.d) return false;
  return true;
}

QuadElem quad_pow(const QuadElem& z, long e) {
  QuadElem r(Rational(1)), b = z;
  unsigned long a = e < 0 ? -e : e;
  if (e < 0) b = QuadElem(Rational(1)) / b;
  while (a) {
    if (a & 1) r = r * b;
    b = b * b;
    a >>= 1;
  }
  return r;
}

namespace {

std::vector<BigInt> divisors(const BigInt& n) {
  Factorization f = factor_int(n);
  std::vector<BigInt> divs{1};
  for (auto& [p, e] : f.factors) {
    size_t sz = divs.size();
    BigInt pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

// all rational roots of a polynomial with rational coefficients (low-to-high)
std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() <= 1) return {};
  std::vector<Rational> roots;
  size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    c.erase(c.begin(), c.begin() + low);
  }
  if (c.size() <= 1) return roots;
  BigInt lcm = 1;
  for (auto& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                            denominator(q).get_mpz_t());
  std::vector<BigInt> ic;
  for (auto& q : c) ic.push_back(numerator(q * Rational(lcm)));
  for (auto& p : divisors(abs(ic.front())))
    for (auto& q : divisors(abs(ic.back()))) {
      Rational cand(p, q);
      cand.canonicalize();
      for (int s = 0; s < 2; ++s) {
        Rational r = s ? -cand : cand;
        if (eval_poly(c, r) == 0 &&
            std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<Rational> rat_sqrt(const Rational& q) {
  Rational r;
  if (q < 0) return std::nullopt;
  if (!rat_kth_root(q, 2, r)) return std::nullopt;
  return r;
}

}  // namespace

std::optional<QuadElem> quad_sqrt(const QuadElem& z) {
  if (z.is_zero()) return QuadElem(Rational(0));
  if (z.is_rational()) {
    if (auto r = rat_sqrt(z.a)) return QuadElem(*r);
    if (z.d != 0) {
      // maybe z = d * square, so sqrt lands in the same field
      if (auto r = rat_sqrt(z.a / Rational(z.d)))
        return QuadElem(z.d, 0, *r);
      return std::nullopt;
    }
    for (int d : {-1, 2, 3})
      if (auto r = rat_sqrt(z.a / Rational(d))) return QuadElem(d, 0, *r);
    return std::nullopt;
  }
  // (al + be*sqrt d)^2 = z: al^2 + d be^2 = z.a, 2 al be = z.b
  auto n = rat_sqrt(quad_norm(z));
  if (!n) return std::nullopt;
  for (int s = 0; s < 2; ++s) {
    Rational nn = s ? -*n : *n;
    Rational al2 = (z.a + nn) / 2;
    if (auto al = rat_sqrt(al2)) {
      if (*al == 0) continue;
      Rational be = z.b / (2 * *al);
      QuadElem r(z.d, *al, be);
      if (r * r == z) return r;
      r = QuadElem(z.d, -*al, -be);
      if (r * r == z) return r;
    }
  }
  return std::nullopt;
}

std::optional<QuadElem> quad_cbrt(const QuadElem& z) {
  if (z.is_rational()) {
    Rational r;
    if (rat_kth_root(z.a, 3, r)) return QuadElem(z.d, r, 0);
    return std::nullopt;  // irrational cube roots of rationals have degree 3
  }
  // (al + be*sqrt d)^3 = z with norm trick: N(root)^3 = N(z)
  Rational nz = quad_norm(z), n;
  if (!rat_kth_root(nz, 3, n)) return std::nullopt;
  // al^3 + 3 d al be^2 = z.a with d be^2 = al^2 - n  =>  4 al^3 - 3 n al = z.a
  std::vector<Rational> cubic{-z.a, -3 * n, 0, 4};
  for (auto& al : rational_roots(cubic)) {
    Rational dbe2 = al * al - n;
    if (z.d == 0) continue;
    Rational be2 = dbe2 / Rational(z.d);
    if (auto be = rat_sqrt(be2)) {
      for (int s = 0; s < 2; ++s) {
        QuadElem r(z.d, al, s ? -*be : *be);
        if (r * r * r == z) return r;
      }
    }
  }
  return std::nullopt;
}

std::optional<QuadElem> quad_kth_root(const QuadElem& z, unsigned k) {
  if (k == 0) throw std::domain_error("quad_kth_root: k = 0");
  if (k == 1) return z;
  if (k % 2 == 0) {
    if (auto s = quad_sqrt(z)) {
      if (auto r = quad_kth_root(*s, k / 2)) return r;
      if (auto r = quad_kth_root(-*s, k / 2)) return r;
    }
    return std::nullopt;
  }
  if (k % 3 == 0) {
    if (auto c = quad_cbrt(z)) return quad_kth_root(*c, k / 3);
    return std::nullopt;
  }
  throw std::domain_error("quad_kth_root: unsupported k");
}

}  // namespace modaut
