#include "modaut/aut_char2.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "modaut/moebius.hpp"
#include "modaut/multipoly.hpp"

namespace modaut {

namespace {

bool fqvec_less(const FqVec& x, const FqVec& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return elem_less(x[i], y[i]);
  }
  return false;
}

Mat2 embed_mat(const Mat2& m, const ExtField* T) {
  return {embed(m[0], T), embed(m[1], T), embed(m[2], T), embed(m[3], T)};
}

FqVec embed_poly(const FqVec& f, const ExtField* T) {
  FqVec out;
  out.reserve(f.size());
  for (auto& e : f) out.push_back(embed(e, T));
  return out;
}

FFElem mat2_det(const Mat2& m) { return m[0] * m[3] + m[1] * m[2]; }

bool frob_fixed(const FFElem& x, const BigInt& card) {
  return ff_pow(x, card) == x;
}

// roots of z^n = v in the field of v (char 2; complete, see q_symmetries)
std::vector<FFElem> nth_roots(const FFElem& v, int n) {
  const ExtField* F = v.F;
  FqVec zp((size_t)n + 1, ff_zero(F));
  zp[0] = v;  // z^n + v  (char 2: -v = v)
  zp[(size_t)n] = ff_one(F);
  std::vector<FFElem> out;
  for (auto& f : factor_ff(zp))
    if (fq::deg(f.factor) == 1) out.push_back(f.factor[0]);
  return out;
}

std::vector<FFElem> unity_roots(const ExtField* F, int n, const BigInt& card) {
  std::vector<FFElem> out;
  for (auto& r : nth_roots(ff_one(F), n))
    if (frob_fixed(r, card)) out.push_back(r);
  std::sort(out.begin(), out.end(), elem_less);
  return out;
}

bool is_q_symmetry(const FqVec& q, const Mat2& m, int genus) {
  if (mat2_det(m).is_zero()) return false;
  return pull_weighted(q, m, genus + 1) == q;
}

void sort_unique(std::vector<Mat2>& mats) {
  std::sort(mats.begin(), mats.end(), mat2_less);
  mats.erase(std::unique(mats.begin(), mats.end(),
                         [](const Mat2& x, const Mat2& y) {
                           return !mat2_less(x, y) && !mat2_less(y, x);
                         }),
             mats.end());
}

// ---- the zero-dimensional route: coefficient system in a, b, c, d ----

using FP = MPoly<FFDom>;

// coefficients (in x) of sum_i f_i (a x + b)^i (c x + d)^{w-i} with symbolic
// a, b, c, d; f lives over F_2
std::vector<FP> symbolic_pull(const FqVec& f, int w, const FFDom& d,
                              const MonomialOrder& ord) {
  std::vector<FP> A = {mp_var(d, 1), mp_var(d, 0)};  // b + a x
  std::vector<FP> C = {mp_var(d, 3), mp_var(d, 2)};  // d + c x
  auto vmul = [&](const std::vector<FP>& u, const std::vector<FP>& v) {
    std::vector<FP> r(u.size() + v.size() - 1);
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j)
        r[i + j] = mp_add(d, r[i + j], mp_mul(d, u[i], v[j], ord), ord);
    return r;
  };
  std::vector<std::vector<FP>> pa(w + 1), pc(w + 1);
  pa[0] = pc[0] = {mp_const(d, d.one())};
  for (int i = 1; i <= w; ++i) {
    pa[i] = vmul(pa[i - 1], A);
    pc[i] = vmul(pc[i - 1], C);
  }
  std::vector<FP> out((size_t)w + 1);
  for (int i = 0; i <= fq::deg(f); ++i) {
    if (f[(size_t)i].is_zero()) continue;
    auto term = vmul(pa[i], pc[w - i]);
    for (size_t j = 0; j < term.size(); ++j)
      out[j] = mp_add(d, out[j], term[j], ord);
  }
  return out;
}

struct Support {
  std::vector<std::pair<FFElem, unsigned>> affine;  // distinct roots, mults
  unsigned inf_mult = 0;
  FieldPtr field;  // splitting field of q
};

Support q_support(const FqVec& q, int genus) {
  FpVec qf;
  for (auto& e : q) qf.push_back(e.c[0]);
  SplitField sf = splitting_field(2, qf);
  Support s;
  s.field = sf.field;
  for (auto& r : sf.roots) {
    if (!s.affine.empty() && s.affine.back().first == r)
      ++s.affine.back().second;
    else
      s.affine.emplace_back(r, 1);
  }
  s.inf_mult = (unsigned)(genus + 1 - fq::deg(q));
  return s;
}

}  // namespace

bool mat2_less(const Mat2& x, const Mat2& y) {
  for (int i = 0; i < 4; ++i)
    if (x[i] != y[i]) return elem_less(x[i], y[i]);
  return false;
}

FqVec pull_weighted(const FqVec& f, const Mat2& m, int w) {
  if (fq::deg(f) > w) throw std::domain_error("pull_weighted: weight too low");
  const ExtField* F = m[0].F;
  FqVec axb{m[1], m[0]}, cxd{m[3], m[2]};
  fq::trim(axb);
  fq::trim(cxd);
  std::vector<FqVec> pa((size_t)w + 1), pc((size_t)w + 1);
  pa[0] = pc[0] = FqVec{ff_one(F)};
  for (int i = 1; i <= w; ++i) {
    pa[i] = fq::mul(pa[i - 1], axb);
    pc[i] = fq::mul(pc[i - 1], cxd);
  }
  FqVec out;
  for (int i = 0; i <= fq::deg(f); ++i) {
    if (f[(size_t)i].is_zero()) continue;
    out = fq::add(out, fq::scal(fq::mul(pa[i], pc[w - i]), f[(size_t)i]));
  }
  return out;
}

QSymmetries q_symmetries(const FqVec& q, int genus, unsigned K) {
  if (q.empty()) throw std::domain_error("q is zero");
  const ExtField* F = q[0].F;
  if (F->p() != 2 || F->k != 1)
    throw std::domain_error("q must be given over F_2");
  if (fq::deg(q) > genus + 1) throw std::domain_error("deg q exceeds g+1");
  if (K == 0 || K > 12)
    throw std::domain_error("extension bound K outside the supported range");
  BigInt card = pow_int(BigInt(2), K);

  Support sup = q_support(q, genus);
  size_t m = sup.affine.size() + (sup.inf_mult ? 1 : 0);
  QSymmetries out;

  if (m >= 3 && sup.field->k > 4) {
    // Large splitting field: the lexicographic basis of the coefficient
    // system degenerates into huge univariate equations, so pin three
    // support points instead. Every symmetry permutes the support (>= 3
    // points), hence is determined projectively by the images of a fixed
    // triple; the lambda = 1 scalings are then recovered by root extraction.
    const ExtField* L = sup.field.get();
    FqVec qL = embed_poly(q, L);
    std::vector<ProjPoint> pts;
    std::vector<unsigned> mult;
    for (auto& [r, mu] : sup.affine) {
      pts.emplace_back(r);
      mult.push_back(mu);
    }
    if (sup.inf_mult) {
      pts.push_back(ProjPoint::infinity());
      mult.push_back(sup.inf_mult);
    }
    int n = (int)pts.size();
    FieldPtr T = make_ext(2, (L->k / std::gcd(L->k, K)) * K);
    out.field = T;
    FqVec qT = embed_poly(q, T.get());
    auto find_pt = [&](const ProjPoint& p) {
      for (int t = 0; t < n; ++t)
        if (pts[(size_t)t] == p) return t;
      return -1;
    };
    std::array<ProjPoint, 3> src{pts[0], pts[1], pts[2]};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        for (int l = 0; l < n; ++l) {
          if (l == i || l == j) continue;
          PGLElem M = from_triples(src, {pts[(size_t)i], pts[(size_t)j],
                                         pts[(size_t)l]});
          bool ok = true;
          for (int t = 0; t < n && ok; ++t) {
            int u = find_pt(act(M, pts[(size_t)t]));
            ok = u >= 0 && mult[(size_t)u] == mult[(size_t)t];
          }
          if (!ok) continue;
          Mat2 m0{M.a, M.b, M.c, M.d};
          FqVec qm = pull_weighted(qL, m0, genus + 1);
          if (fq::deg(qm) != fq::deg(qL)) continue;
          FFElem lam = qm.back() / qL.back();
          if (fq::scal(qL, lam) != qm) continue;
          Mat2 mT = embed_mat(m0, T.get());
          for (auto& rho : nth_roots(embed(ff_inv(lam), T.get()), genus + 1)) {
            Mat2 mm{rho * mT[0], rho * mT[1], rho * mT[2], rho * mT[3]};
            bool inK = true;
            for (auto& e : mm) inK = inK && frob_fixed(e, card);
            if (inK && is_q_symmetry(qT, mm, genus)) out.mats.push_back(mm);
          }
        }
      }
  } else if (m >= 3) {
    // The support has >= 3 points, so the matrices satisfying the condition
    // form a finite set over the closure: solve the coefficient system.
    auto F2 = make_ext(2, 1);
    FFDom dom{F2.get()};
    MonomialOrder ord;
    ord.kind = MonomialOrder::lex;
    ord.perm = {4, 0, 1, 2, 3};
    std::vector<FP> gens;
    auto qs = symbolic_pull(q, genus + 1, dom, ord);
    for (int j = 0; j <= genus + 1; ++j) {
      FFElem qj = j <= fq::deg(q) ? q[(size_t)j] : ff_zero(F);
      gens.push_back(mp_add(dom, qs[(size_t)j],
                            mp_const(dom, embed(qj, F2.get())), ord));
    }
    // saturate the determinant: t (ad + bc) = 1
    FP det = mp_add(dom, mp_mul(dom, mp_var(dom, 0), mp_var(dom, 3), ord),
                    mp_mul(dom, mp_var(dom, 1), mp_var(dom, 2), ord), ord);
    gens.push_back(mp_add(dom, mp_mul(dom, mp_var(dom, 4), det, ord),
                          mp_const(dom, dom.one()), ord));
    // seed: the image of every F_2-rational support point is again a zero of
    // the form, i.e. the evaluation of the system at that point vanishes
    auto eval_seed = [&](const FP& x0, const FP& z0) {
      FP ix = mp_add(dom, mp_mul(dom, mp_var(dom, 0), x0, ord),
                     mp_mul(dom, mp_var(dom, 1), z0, ord), ord);
      FP iz = mp_add(dom, mp_mul(dom, mp_var(dom, 2), x0, ord),
                     mp_mul(dom, mp_var(dom, 3), z0, ord), ord);
      FP s;
      for (int i = 0; i <= genus + 1; ++i) {
        FFElem qi = i <= fq::deg(q) ? q[(size_t)i] : ff_zero(F);
        if (qi.is_zero()) continue;
        FP t = mp_const(dom, dom.one());
        for (int u = 0; u < i; ++u) t = mp_mul(dom, t, ix, ord);
        for (int u = i; u <= genus; ++u) t = mp_mul(dom, t, iz, ord);
        s = mp_add(dom, s, t, ord);
      }
      return s;
    };
    FP one = mp_const(dom, dom.one()), zero;
    for (auto& [r, mult] : sup.affine) {
      (void)mult;
      if (r.is_zero())
        gens.push_back(eval_seed(zero, one));
      else if (r == ff_one(sup.field.get()))
        gens.push_back(eval_seed(one, one));
    }
    if (sup.inf_mult) gens.push_back(eval_seed(one, zero));

    Variety V = variety_fp(gens, {0, 1, 2, 3, 4}, F2.get(), K);
    out.field = V.field;
    out.truncated = V.truncated;
    for (auto& pt : V.points) {
      Mat2 mm{pt[0], pt[1], pt[2], pt[3]};
      bool inK = true;
      for (auto& e : mm) inK = inK && frob_fixed(e, card);
      if (inK) out.mats.push_back(mm);
    }
  } else if (m == 2) {
    if (sup.inf_mult)
      throw std::domain_error("two-point q support at infinity not handled");
    if (K % sup.field->k)
      throw std::domain_error(
          "K is not a multiple of the degree of the root field of q");
    FieldPtr E = make_ext(2, K);
    out.field = E;
    FFElem r1 = embed(sup.affine[0].first, E.get());
    FFElem r2 = embed(sup.affine[1].first, E.get());
    FqVec qE = embed_poly(q, E.get());
    bool swappable = sup.affine[0].second == sup.affine[1].second;
    auto push_scaled = [&](const Mat2& m0) {
      if (mat2_det(m0).is_zero()) return;
      FqVec qm = pull_weighted(qE, m0, genus + 1);
      if (fq::deg(qm) != fq::deg(qE)) return;
      FFElem lam = qm.back() / qE.back();
      if (fq::scal(qE, lam) != qm) return;
      for (auto& rho : nth_roots(ff_inv(lam), genus + 1)) {
        Mat2 mm{rho * m0[0], rho * m0[1], rho * m0[2], rho * m0[3]};
        if (is_q_symmetry(qE, mm, genus)) out.mats.push_back(mm);
      }
    };
    for (auto& gam : enumerate(E.get())) {
      if (gam.is_zero()) continue;
      FFElem gp1 = gam + ff_one(E.get());
      // eigenvalue gamma at r1, 1 at r2
      push_scaled({gam * r1 + r2, r1 * r2 * gp1, gp1, gam * r2 + r1});
      if (swappable)  // r1 -> r2 -> r1
        push_scaled({gam * r2 + r1, gam * r2 * r2 + r1 * r1, gp1,
                     gam * r2 + r1});
    }
  } else {
    // One support point: the solutions form a two-parameter family, so the
    // enumeration is quadratic in the field size.
    if (K > 8)
      throw std::domain_error("K exceeds the cap for a one-point support");
    FieldPtr E = make_ext(2, K);
    out.field = E;
    FqVec qE = embed_poly(q, E.get());
    auto mus = unity_roots(E.get(), genus + 1, card);
    auto xs = enumerate(E.get());
    if (sup.inf_mult == 0) {
      FFElem r = embed(sup.affine[0].first, E.get());  // Galois-fixed
      for (auto& s : mus)
        for (auto& cc : xs) {
          FFElem rc = r * cc;
          for (auto& dd : xs) {
            if (dd == rc) continue;
            out.mats.push_back({s + rc, r * (s + dd), cc, dd});
          }
        }
    } else {
      for (auto& dd : mus)
        for (auto& aa : xs) {
          if (aa.is_zero()) continue;
          for (auto& bb : xs)
            out.mats.push_back({aa, bb, ff_zero(E.get()), dd});
        }
    }
    // spot-verify the parameterization (every entry when the family is small)
    size_t step = out.mats.size() <= 10000 ? 1 : 97;
    for (size_t i = 0; i < out.mats.size(); i += step)
      if (!is_q_symmetry(qE, out.mats[i], genus))
        throw std::logic_error("q-symmetry parameterization failed");
  }
  sort_unique(out.mats);
  if (out.mats.size() <= 10000) {
    FqVec qW = embed_poly(q, out.field.get());
    for (auto& mm : out.mats)
      if (!is_q_symmetry(qW, mm, genus))
        throw std::logic_error("q-symmetry verification failed");
  } else {
    for (auto& mm : out.mats)
      if (mat2_det(mm).is_zero())
        throw std::logic_error("singular q-symmetry candidate");
  }
  return out;
}

QSymmetries q_symmetries_exhaustive(const FqVec& q, int genus, unsigned K) {
  if (K == 0 || K > 4)
    throw std::domain_error("exhaustive oracle limited to K <= 4");
  QSymmetries out;
  FieldPtr E = make_ext(2, K);
  out.field = E;
  FqVec qE = embed_poly(q, E.get());
  auto xs = enumerate(E.get());
  for (auto& a : xs)
    for (auto& b : xs)
      for (auto& c : xs)
        for (auto& d : xs) {
          Mat2 m{a, b, c, d};
          if (mat2_det(m).is_zero()) continue;
          if (pull_weighted(qE, m, genus + 1) == qE) out.mats.push_back(m);
        }
  sort_unique(out.mats);
  return out;
}

// ---- Artin-Schreier solving ----

ASOperator make_as_operator(const FqVec& q, int genus) {
  if (q.empty() || fq::deg(q) > genus + 1)
    throw std::domain_error("need 0 < deg q <= g+1");
  const ExtField* F = q[0].F;
  unsigned k = F->k;
  ASOperator op;
  op.field = F;
  op.q = q;
  op.genus = genus;
  size_t cols = (size_t)(genus + 2) * k, rows = (size_t)(2 * genus + 3) * k;
  op.matrix.assign(rows, std::vector<uint8_t>(cols, 0));
  for (int i = 0; i <= genus + 1; ++i)
    for (unsigned j = 0; j < k; ++j) {
      FpVec unit(k, 0);
      unit[j] = 1;
      FqVec h((size_t)i + 1, ff_zero(F));
      h[(size_t)i] = FFElem(F, unit);
      FqVec img = fq::add(fq::mul(h, h), fq::mul(q, h));
      size_t col = (size_t)i * k + j;
      for (int r = 0; r <= fq::deg(img); ++r)
        for (unsigned s = 0; s < k; ++s)
          op.matrix[(size_t)r * k + s][col] = (uint8_t)img[(size_t)r].c[s];
    }
  // precompute the full row reduction, recording the transform
  op.trans_.assign(rows, std::vector<uint8_t>(rows, 0));
  for (size_t r = 0; r < rows; ++r) op.trans_[r][r] = 1;
  auto A = op.matrix;
  size_t rank = 0;
  op.pivot_col_.assign(rows, -1);
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && !A[piv][c]) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[rank]);
    std::swap(op.trans_[piv], op.trans_[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || !A[r][c]) continue;
      for (size_t t = 0; t < cols; ++t) A[r][t] ^= A[rank][t];
      for (size_t t = 0; t < rows; ++t) op.trans_[r][t] ^= op.trans_[rank][t];
    }
    op.pivot_col_[rank] = (int)c;
    ++rank;
  }
  // the kernel of h -> h^2 + qh on deg <= g+1 is exactly {0, q}
  if (rank != cols - 1)
    throw std::logic_error("Artin-Schreier operator has unexpected kernel");
  return op;
}

std::vector<FqVec> ASOperator::solve(const FqVec& rhs) const {
  const ExtField* F = field;
  unsigned k = F->k;
  size_t rows = matrix.size(), cols = matrix[0].size();
  if (fq::deg(rhs) > 2 * genus + 2)
    throw std::domain_error("rhs degree exceeds 2g+2");
  std::vector<uint8_t> v(rows, 0);
  for (int r = 0; r <= fq::deg(rhs); ++r)
    for (unsigned s = 0; s < k; ++s)
      v[(size_t)r * k + s] = (uint8_t)rhs[(size_t)r].c[s];
  std::vector<uint8_t> w(rows, 0);
  for (size_t r = 0; r < rows; ++r) {
    uint8_t acc = 0;
    for (size_t t = 0; t < rows; ++t) acc ^= trans_[r][t] & v[t];
    w[r] = acc;
  }
  std::vector<uint8_t> x(cols, 0);
  for (size_t r = 0; r < rows; ++r) {
    if (pivot_col_[r] >= 0)
      x[(size_t)pivot_col_[r]] = w[r];
    else if (w[r])
      return {};  // inconsistent
  }
  FqVec h;
  for (int i = 0; i <= genus + 1; ++i) {
    FpVec cc(k, 0);
    for (unsigned j = 0; j < k; ++j) cc[j] = x[(size_t)i * k + j];
    h.emplace_back(F, std::move(cc));
  }
  fq::trim(h);
  // double-check the particular solution, then pair it with h + q
  if (fq::add(fq::mul(h, h), fq::mul(q, h)) != rhs)
    throw std::logic_error("Artin-Schreier solution check failed");
  FqVec h2 = fq::add(h, q);
  if (fqvec_less(h2, h)) std::swap(h, h2);
  return {h, h2};
}

Char2Aut compose_aut2(const Char2Aut& s1, const Char2Aut& s2, int genus) {
  Char2Aut out;
  out.M = {s1.M[0] * s2.M[0] + s1.M[1] * s2.M[2],
           s1.M[0] * s2.M[1] + s1.M[1] * s2.M[3],
           s1.M[2] * s2.M[0] + s1.M[3] * s2.M[2],
           s1.M[2] * s2.M[1] + s1.M[3] * s2.M[3]};
  out.h = fq::add(s2.h, pull_weighted(s1.h, s2.M, genus + 1));
  return out;
}

Char2Aut Char2Group::canonical(const Mat2& m, FqVec h) const {
  Mat2 mm = m[0].F == field.get() ? m : embed_mat(m, field.get());
  Mat2 best = mm;
  for (auto& a : scalars) {
    Mat2 cand{a * mm[0], a * mm[1], a * mm[2], a * mm[3]};
    if (mat2_less(cand, best)) best = cand;
  }
  Char2Aut out;
  out.M = best;
  out.h = std::move(h);
  if (!out.h.empty() && out.h[0].F != field.get())
    out.h = embed_poly(out.h, field.get());
  return out;
}

namespace {
bool aut2_less(const Char2Aut& x, const Char2Aut& y) {
  if (mat2_less(x.M, y.M)) return true;
  if (mat2_less(y.M, x.M)) return false;
  return fqvec_less(x.h, y.h);
}
bool aut2_eq(const Char2Aut& x, const Char2Aut& y) {
  return !aut2_less(x, y) && !aut2_less(y, x);
}
}  // namespace

int Char2Group::index_of(const Mat2& m, const FqVec& h) const {
  Char2Aut s = canonical(m, h);
  auto it = std::lower_bound(elems.begin(), elems.end(), s, aut2_less);
  if (it != elems.end() && aut2_eq(*it, s)) return (int)(it - elems.begin());
  return -1;
}

Char2Group full_group2(const Char2Curve& c, unsigned K) {
  QSymmetries qs = q_symmetries(c.q, c.genus, K);
  const ExtField* W = qs.field.get();
  Char2Group G;
  G.field = qs.field;
  G.genus = c.genus;
  G.q = embed_poly(c.q, W);
  G.p = embed_poly(c.p, W);
  G.truncated = qs.truncated;
  G.scalars = unity_roots(W, c.genus + 1, pow_int(BigInt(2), K));

  ASOperator op = make_as_operator(G.q, c.genus);
  for (auto& M : qs.mats) {
    FqVec rhs = fq::add(pull_weighted(G.p, M, 2 * c.genus + 2), G.p);
    for (auto& h : op.solve(rhs)) {
      ++G.raw_count;
      G.elems.push_back(G.canonical(M, h));
    }
  }
  std::sort(G.elems.begin(), G.elems.end(), aut2_less);
  G.elems.erase(std::unique(G.elems.begin(), G.elems.end(), aut2_eq),
                G.elems.end());
  if (G.elems.size() * G.scalars.size() != G.raw_count)
    throw std::logic_error("scalar orbits of uneven size");

  int n = (int)G.elems.size();
  Mat2 id{ff_one(W), ff_zero(W), ff_zero(W), ff_one(W)};
  G.id_index = G.index_of(id, {});
  G.j_index = G.index_of(id, G.q);
  if (G.id_index < 0 || G.j_index < 0 || G.id_index == G.j_index)
    throw std::logic_error("identity or hyperelliptic involution missing");

  G.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Char2Aut s = compose_aut2(G.elems[i], G.elems[j], c.genus);
      int k = G.index_of(s.M, s.h);
      if (k < 0) throw std::logic_error("char-2 group not closed");
      G.table[i][j] = k;
    }

  for (int i = 0; i < n; ++i) {
    if (G.table[G.id_index][i] != i || G.table[i][G.id_index] != i)
      throw std::logic_error("char-2 group: identity axiom fails");
    if (G.table[G.j_index][i] != G.table[i][G.j_index])
      throw std::logic_error("char-2 group: j not central");
    bool has_inv = false;
    for (int j = 0; j < n; ++j)
      if (G.table[i][j] == G.id_index) has_inv = true;
    if (!has_inv) throw std::logic_error("char-2 group: missing inverse");
  }
  if (G.table[G.j_index][G.j_index] != G.id_index)
    throw std::logic_error("char-2 group: j^2 != 1");
  auto assoc = [&](int a, int b, int cc) {
    return G.table[G.table[a][b]][cc] == G.table[a][G.table[b][cc]];
  };
  if (n <= 200) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int cc = 0; cc < n; ++cc)
          if (!assoc(a, b, cc))
            throw std::logic_error("char-2 group: associativity fails");
  } else {
    std::mt19937 rng(12345);
    for (int t = 0; t < 5000; ++t)
      if (!assoc((int)(rng() % n), (int)(rng() % n), (int)(rng() % n)))
        throw std::logic_error("char-2 group: associativity fails");
  }
  return G;
}

}  // namespace modaut
