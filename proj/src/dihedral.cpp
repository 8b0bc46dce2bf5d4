#include "modaut/dihedral.hpp"

#include "modaut/fqpoly.hpp"

namespace modaut {

namespace {

// g(x) = sum f_i (t11 x + t12)^i (t21 x + t22)^{s-i}, s = deg f
template <class D>
UniPoly<D> transform_poly(const D& d, const UniPoly<D>& f,
                          const typename D::Elem& t11,
                          const typename D::Elem& t12,
                          const typename D::Elem& t21,
                          const typename D::Elem& t22) {
  int s = pdeg(f);
  UniPoly<D> num{t12, t11}, den{t22, t21};
  ptrim(d, num);
  ptrim(d, den);
  std::vector<UniPoly<D>> np(s + 1), dp(s + 1);
  np[0] = dp[0] = UniPoly<D>{d.one()};
  for (int i = 1; i <= s; ++i) {
    np[i] = pmul(d, np[i - 1], num);
    dp[i] = pmul(d, dp[i - 1], den);
  }
  UniPoly<D> g;
  for (int i = 0; i <= s; ++i) {
    if (d.is_zero(f[i])) continue;
    g = padd(d, g, pscal(d, pmul(d, np[i], dp[s - i]), f[i]));
  }
  return g;
}

template <class D>
typename D::Elem dpow(const D& d, typename D::Elem x, int e) {
  auto r = d.one();
  for (int i = 0; i < e; ++i) r = d.mul(r, x);
  return r;
}

// shared tail: check evenness, extract b_1..b_g and mu^{g+1}
template <class D, class Model>
void even_reduce(const D& d, const UniPoly<D>& g, int s, Model& out) {
  if (pdeg(g) != s || d.is_zero(g[0]))
    throw std::domain_error("involution moves a branch point to 0 or inf");
  for (int i = 1; i < s; i += 2)
    if (!d.is_zero(g[i]))
      throw std::domain_error("matrix is not a symmetry of the model");
  int genus = (s - 2) / 2;
  out.genus = genus;
  for (int j = 1; j <= genus; ++j)
    out.b.push_back(d.divexact(g[2 * (genus + 1 - j)], g[s]));
  out.mu_pow = d.divexact(g[0], g[s]);
}

template <class D, class Model>
std::vector<typename D::Elem> u_from_model(const D& d, const Model& m) {
  int g = m.genus;
  std::vector<typename D::Elem> u;
  for (int i = 1; i <= g; ++i) {
    auto t1 = d.divexact(d.mul(dpow(d, m.b[0], g - i + 1), m.b[i - 1]),
                         m.mu_pow);
    auto t2 = d.divexact(d.mul(dpow(d, m.b[g - 1], g - i + 1), m.b[g - i]),
                         dpow(d, m.mu_pow, g - i + 1));
    u.push_back(d.add(t1, t2));
  }
  return u;
}

}  // namespace

SymmetricModel normalize_exact(const std::vector<QuadElem>& f,
                               const std::array<QuadElem, 4>& M) {
  QuadDom D;
  UniPoly<QuadDom> fc = f;
  ptrim(D, fc);
  int s = pdeg(fc);
  if (s < 4 || s % 2) throw std::domain_error("need even degree 2g+2 >= 6");
  const QuadElem &a = M[0], &b = M[1], &c = M[2], &d = M[3];
  bool scalar = b.is_zero() && c.is_zero() && a == d;
  if (scalar) throw std::domain_error("matrix acts trivially");
  if (!(a + d).is_zero())
    throw std::domain_error("matrix is not an involution");

  UniPoly<QuadDom> g;
  if (b.is_zero() && c.is_zero()) {
    g = fc;  // already x -> -x
  } else {
    QuadElem t = a * a + b * c;
    if (t.is_zero()) throw std::domain_error("singular matrix");
    auto root = quad_sqrt(t);
    if (!root)
      throw std::domain_error("eigenvalue outside the supported fields");
    // the -sqrt branch reproduces the printed normalized models
    QuadElem mu = -*root;
    if (!b.is_zero())
      g = transform_poly(D, fc, b, b, mu - a, -mu - a);
    else  // eigenvectors (2a, c) and (0, 1)
      g = transform_poly(D, fc, a + a, QuadElem(Rational(0)), c,
                         QuadElem(Rational(1)));
  }
  SymmetricModel out;
  even_reduce(D, g, s, out);
  return out;
}

SymmetricModelF normalize_mod(const FqVec& f, const PGLElem& M) {
  const ExtField* F = M.field();
  if (F->p() == 2) throw std::domain_error("odd characteristic only");
  FFDom D{F};
  FqVec fc = f;
  fq::trim(fc);
  int s = pdeg(fc);
  if (s < 4 || s % 2) throw std::domain_error("need even degree 2g+2 >= 6");
  bool scalar = M.b.is_zero() && M.c.is_zero() && M.a == M.d;
  if (scalar) throw std::domain_error("matrix acts trivially");
  if (!(M.a + M.d).is_zero())
    throw std::domain_error("matrix is not an involution");

  FqVec g;
  if (M.b.is_zero() && M.c.is_zero()) {
    g = fc;
  } else {
    FFElem t = M.a * M.a + M.b * M.c;
    if (t.is_zero()) throw std::domain_error("singular matrix");
    auto root = ff_sqrt(t);
    FFElem A = M.a, B = M.b, C = M.c;
    if (!root) {  // eigenvalue lives in the quadratic extension
      FieldPtr E = make_ext(F->p(), 2 * F->k);
      FqVec fe;
      for (auto& x : fc) fe.push_back(embed(x, E.get()));
      fc = fe;
      A = embed(A, E.get());
      B = embed(B, E.get());
      C = embed(C, E.get());
      F = E.get();
      D = FFDom{F};
      root = ff_sqrt(embed(t, F));
      if (!root) throw std::logic_error("square root missing in extension");
    }
    FFElem mu = -*root;  // same branch convention as the exact path
    if (!B.is_zero())
      g = transform_poly(D, fc, B, B, mu - A, -mu - A);
    else
      g = transform_poly(D, fc, A + A, ff_zero(F), C, ff_one(F));
  }
  SymmetricModelF out;
  out.field = make_ext(F->p(), F->k);
  even_reduce(D, g, s, out);
  return out;
}

std::optional<std::vector<QuadElem>> symmetric_coeffs(const SymmetricModel& m) {
  auto mu = quad_kth_root(m.mu_pow, (unsigned)(m.genus + 1));
  if (!mu) return std::nullopt;
  std::vector<QuadElem> a;
  QuadElem pw(Rational(1));
  for (int j = 1; j <= m.genus; ++j) {
    pw = pw * *mu;
    a.push_back(m.b[j - 1] / pw);
  }
  return a;
}

std::pair<FieldPtr, std::vector<FFElem>> symmetric_coeffs_mod(
    const SymmetricModelF& m) {
  const ExtField* F = m.field.get();
  // least root of x^{g+1} - mu_pow, extending the field when needed
  FqVec pol(m.genus + 2, ff_zero(F));
  pol[0] = -m.mu_pow;
  pol[m.genus + 1] = ff_one(F);
  auto fac = factor_ff(pol);
  unsigned dd = ~0u;
  for (auto& f : fac) dd = std::min(dd, (unsigned)fq::deg(f.factor));
  FieldPtr K = make_ext(F->p(), F->k * dd);
  FFElem mu;
  if (dd == 1) {
    FqVec best;
    for (auto& f : fac)
      if (fq::deg(f.factor) == 1 &&
          (best.empty() || elem_less(-f.factor[0], -best[0])))
        best = f.factor;
    mu = -best[0];
  } else {
    FqVec pe;
    for (auto& x : pol) pe.push_back(embed(x, K.get()));
    std::optional<FFElem> r;
    for (auto& f : factor_ff(pe))
      if (fq::deg(f.factor) == 1 && (!r || elem_less(-f.factor[0], *r)))
        r = -f.factor[0];
    if (!r) throw std::logic_error("kth root missing in extension");
    mu = *r;
  }
  std::vector<FFElem> a;
  FFElem pw = ff_one(K.get());
  for (int j = 1; j <= m.genus; ++j) {
    pw = pw * mu;
    a.push_back(embed(m.b[j - 1], K.get()) / pw);
  }
  return {K, a};
}

std::vector<QuadElem> dihedral_u(const SymmetricModel& m) {
  QuadDom D;
  return u_from_model(D, m);
}

std::vector<FFElem> dihedral_u_mod(const SymmetricModelF& m) {
  FFDom D{m.field.get()};
  return u_from_model(D, m);
}

}  // namespace modaut
