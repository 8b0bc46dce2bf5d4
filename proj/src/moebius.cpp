#include "modaut/moebius.hpp"

#include <sstream>

namespace modaut {

std::string ProjPoint::str() const { return inf ? "inf" : x.str(); }

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  if (a.inf || b.inf) return a.inf == b.inf;
  return a.x == b.x;
}

bool point_less(const ProjPoint& a, const ProjPoint& b) {
  if (a.inf || b.inf) return !a.inf && b.inf;
  return elem_less(a.x, b.x);
}

PGLElem::PGLElem(FFElem aa, FFElem bb, FFElem cc, FFElem dd)
    : a(std::move(aa)), b(std::move(bb)), c(std::move(cc)), d(std::move(dd)) {
  if ((a * d - b * c).is_zero())
    throw std::domain_error("PGLElem: singular matrix");
  const FFElem* lead = &a;
  if (lead->is_zero()) lead = &b;
  if (lead->is_zero()) lead = &c;
  if (lead->is_zero()) lead = &d;
  FFElem s = ff_inv(*lead);
  a = a * s;
  b = b * s;
  c = c * s;
  d = d * s;
}

std::string PGLElem::str() const {
  std::ostringstream os;
  os << "[" << a.str() << "," << b.str() << ";" << c.str() << "," << d.str()
     << "]";
  return os.str();
}

bool operator==(const PGLElem& m, const PGLElem& n) {
  return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

bool pgl_less(const PGLElem& m, const PGLElem& n) {
  if (m.a != n.a) return elem_less(m.a, n.a);
  if (m.b != n.b) return elem_less(m.b, n.b);
  if (m.c != n.c) return elem_less(m.c, n.c);
  return elem_less(m.d, n.d);
}

PGLElem pgl_identity(const ExtField* F) {
  return PGLElem(ff_one(F), ff_zero(F), ff_zero(F), ff_one(F));
}

PGLElem pgl_mul(const PGLElem& m, const PGLElem& n) {
  return PGLElem(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                 m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d);
}

PGLElem pgl_inv(const PGLElem& m) {
  return PGLElem(m.d, -m.b, -m.c, m.a);  // adjugate; scalar det drops out
}

ProjPoint act(const PGLElem& m, const ProjPoint& p) {
  if (p.inf) {
    if (m.c.is_zero()) return ProjPoint::infinity();
    return ProjPoint(m.a / m.c);
  }
  FFElem den = m.c * p.x + m.d;
  if (den.is_zero()) return ProjPoint::infinity();
  return ProjPoint((m.a * p.x + m.b) / den);
}

namespace {

// matrix of the map sending (p1,p2,p3) to (0,1,inf)
PGLElem to_standard(const ExtField* F, const std::array<ProjPoint, 3>& p) {
  const ProjPoint &p1 = p[0], &p2 = p[1], &p3 = p[2];
  FFElem one = ff_one(F), zero = ff_zero(F);
  if (p1.inf)  // x -> (p2-p3)/(x-p3)
    return PGLElem(zero, p2.x - p3.x, one, -p3.x);
  if (p2.inf)  // x -> (x-p1)/(x-p3)
    return PGLElem(one, -p1.x, one, -p3.x);
  if (p3.inf)  // x -> (x-p1)/(p2-p1)
    return PGLElem(one, -p1.x, zero, p2.x - p1.x);
  // x -> ((x-p1)(p2-p3)) / ((x-p3)(p2-p1))
  FFElem u = p2.x - p3.x, v = p2.x - p1.x;
  return PGLElem(u, -(p1.x * u), v, -(p3.x * v));
}

}  // namespace

PGLElem from_triples(const std::array<ProjPoint, 3>& src,
                     const std::array<ProjPoint, 3>& dst) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (src[i] == src[j] || dst[i] == dst[j])
        throw std::domain_error("from_triples: repeated point");
  const ExtField* F = nullptr;
  for (auto& q : src)
    if (!q.inf) F = q.x.F;
  for (auto& q : dst)
    if (!q.inf && !F) F = q.x.F;
  if (!F) throw std::domain_error("from_triples: no finite point");
  return pgl_mul(pgl_inv(to_standard(F, dst)), to_standard(F, src));
}

Pullback pullback(const FqVec& f_in, const PGLElem& m) {
  FqVec f = f_in;
  fq::trim(f);
  if (f.empty()) throw std::domain_error("pullback: zero polynomial");
  const ExtField* F = m.field();
  int s = fq::deg(f);
  // P(x) = f((ax+b)/(cx+d)) (cx+d)^s = sum f_i (ax+b)^i (cx+d)^(s-i)
  FqVec num{m.b, m.a}, den{m.d, m.c};
  fq::trim(num);
  fq::trim(den);
  std::vector<FqVec> np(s + 1), dp(s + 1);
  np[0] = dp[0] = FqVec{ff_one(F)};
  for (int i = 1; i <= s; ++i) {
    np[i] = fq::mul(np[i - 1], num);
    dp[i] = fq::mul(dp[i - 1], den);
  }
  FqVec P;
  for (int i = 0; i <= s; ++i) {
    if (f[i].is_zero()) continue;
    P = fq::add(P, fq::scal(fq::mul(np[i], dp[s - i]), f[i]));
  }
  Pullback out;
  out.degree_drop = fq::deg(P) < s;
  out.multiplier = P.back();
  out.fstar = fq::monic(std::move(P));
  return out;
}

}  // namespace modaut
