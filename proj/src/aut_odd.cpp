#include "modaut/aut_odd.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace modaut {

namespace {

bool lift_less(const LiftedAut& x, const LiftedAut& y) {
  if (x.M != y.M) return pgl_less(x.M, y.M);
  return elem_less(x.e, y.e);
}

PGLElem embed_pgl(const PGLElem& m, const ExtField* T) {
  return PGLElem(embed(m.a, T), embed(m.b, T), embed(m.c, T), embed(m.d, T));
}

}  // namespace

FFElem lift_constant(const PGLElem& M, const FqVec& f) {
  Pullback pb = pullback(f, M);
  if (pb.degree_drop || pb.fstar != fq::monic(f))
    throw std::domain_error("matrix is not a symmetry of f");
  return pb.multiplier / f.back();
}

ReducedGroup reduced_group(const OddCharCurve& c) {
  if (fq::deg(c.f) % 2)
    throw std::domain_error("expected an even-degree model (deg f = 2g+2)");
  ReducedGroup rg;
  rg.locus = branch_locus(c);
  rg.field = rg.locus.field;
  const ExtField* L = rg.field.get();
  auto& pts = rg.locus.points;  // sorted by point_less, all affine
  int n = (int)pts.size();
  if (n != fq::deg(c.f))
    throw std::domain_error("branch locus not reduced (singular curve)");

  FqVec fL;
  for (auto& x : c.f) fL.push_back(embed(x, L));
  FqVec fmon = fq::monic(fL);

  auto find_pt = [&](const ProjPoint& p) -> int {
    auto it = std::lower_bound(pts.begin(), pts.end(), p, point_less);
    if (it != pts.end() && *it == p) return (int)(it - pts.begin());
    return -1;
  };

  std::array<ProjPoint, 3> src{pts[0], pts[1], pts[2]};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        PGLElem M = from_triples(src, {pts[i], pts[j], pts[k]});
        // fail fast: every branch point must land on a branch point
        std::vector<int> perm(n, -1);
        perm[0] = i;
        perm[1] = j;
        perm[2] = k;
        bool ok = true;
        for (int t = 3; t < n && ok; ++t) {
          int im = find_pt(act(M, pts[t]));
          if (im < 0) ok = false;
          perm[t] = im;
        }
        if (!ok) continue;
        Pullback pb = pullback(fL, M);
        if (pb.degree_drop || pb.fstar != fmon) continue;
        rg.elems.push_back({M, std::move(perm), pb.multiplier / fL.back()});
      }
    }

  std::sort(rg.elems.begin(), rg.elems.end(),
            [](const ReducedAut& x, const ReducedAut& y) {
              return pgl_less(x.M, y.M);
            });

  // sanity: identity present, only the identity fixes the locus pointwise,
  // and the element set is closed under composition
  PGLElem id = pgl_identity(L);
  auto contains = [&](const PGLElem& m) {
    auto it = std::lower_bound(
        rg.elems.begin(), rg.elems.end(), m,
        [](const ReducedAut& x, const PGLElem& v) { return pgl_less(x.M, v); });
    return it != rg.elems.end() && it->M == m;
  };
  if (!contains(id)) throw std::logic_error("reduced group: identity missing");
  for (auto& e : rg.elems) {
    bool fixes_all = true;
    for (int t = 0; t < n; ++t)
      if (e.perm[t] != t) fixes_all = false;
    if (fixes_all && e.M != id)
      throw std::logic_error("reduced group: non-identity fixes the locus");
  }
  for (auto& x : rg.elems)
    for (auto& y : rg.elems)
      if (!contains(pgl_mul(x.M, y.M)))
        throw std::logic_error("reduced group: not closed");
  return rg;
}

LiftedAut compose_aut(const LiftedAut& s1, const LiftedAut& s2, int genus) {
  FFElem ra = s1.M.a * s2.M.a + s1.M.b * s2.M.c;
  FFElem rb = s1.M.a * s2.M.b + s1.M.b * s2.M.d;
  FFElem rc = s1.M.c * s2.M.a + s1.M.d * s2.M.c;
  FFElem rd = s1.M.c * s2.M.b + s1.M.d * s2.M.d;
  FFElem lam = !ra.is_zero() ? ra : !rb.is_zero() ? rb
                              : !rc.is_zero()     ? rc
                                                  : rd;
  LiftedAut out;
  out.M = PGLElem(ra, rb, rc, rd);
  out.e = s1.e * s2.e / ff_pow(lam, BigInt(genus + 1));
  return out;
}

LiftedAut invert_aut(const LiftedAut& s, int genus) {
  // adjugate [d,-b;-c,a]; raw product with M is det(M)/lambda' * Id
  FFElem lam = !s.M.d.is_zero() ? s.M.d : !s.M.b.is_zero() ? -s.M.b
                                 : !s.M.c.is_zero()        ? -s.M.c
                                                           : s.M.a;
  LiftedAut out;
  out.M = PGLElem(s.M.d, -s.M.b, -s.M.c, s.M.a);
  out.e = ff_pow(s.M.det() / lam, BigInt(genus + 1)) / s.e;
  return out;
}

int AutGroup::index_of(const LiftedAut& s) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), s, lift_less);
  if (it != elems.end() && it->M == s.M && it->e == s.e)
    return (int)(it - elems.begin());
  return -1;
}

AutGroup full_group(const OddCharCurve& c, unsigned extra_degree) {
  ReducedGroup rg = reduced_group(c);
  uint64_t p = c.field->p();
  FieldPtr W = make_ext(p, rg.field->k * std::max(1u, extra_degree));

  AutGroup G;
  G.genus = c.genus;
  for (int pass = 0;; ++pass) {
    FqVec fW;
    for (auto& x : c.f) fW.push_back(embed(x, W.get()));
    bool all_square = true;
    std::vector<std::pair<PGLElem, FFElem>> lifts;
    for (auto& r : rg.elems) {
      PGLElem M = embed_pgl(r.M, W.get());
      FFElem C = lift_constant(M, fW);
      auto e = ff_sqrt(C);
      if (!e) {
        all_square = false;
        break;
      }
      lifts.emplace_back(M, *e);
    }
    if (all_square) {
      for (auto& [M, e] : lifts) {
        G.elems.push_back({M, e});
        G.elems.push_back({M, -e});
      }
      break;
    }
    if (pass >= 1)
      throw std::logic_error("lift constants not square in a quadratic ext");
    W = make_ext(p, W->k * 2);  // one quadratic extension always suffices
  }
  G.field = W;

  std::sort(G.elems.begin(), G.elems.end(), lift_less);
  int n = (int)G.elems.size();
  PGLElem id = pgl_identity(W.get());
  G.id_index = G.index_of({id, ff_one(W.get())});
  G.j_index = G.index_of({id, -ff_one(W.get())});
  if (G.id_index < 0 || G.j_index < 0)
    throw std::logic_error("full group: identity lifts missing");

  G.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = G.index_of(compose_aut(G.elems[i], G.elems[j], G.genus));
      if (k < 0) throw std::logic_error("full group: not closed");
      G.table[i][j] = k;
    }

  // group axioms: identity, inverses (rows/columns are permutations),
  // j central with j^2 = 1, associativity (exhaustive when small)
  for (int i = 0; i < n; ++i) {
    if (G.table[G.id_index][i] != i || G.table[i][G.id_index] != i)
      throw std::logic_error("full group: identity axiom fails");
    if (G.table[G.j_index][i] != G.table[i][G.j_index])
      throw std::logic_error("full group: j not central");
    bool has_inv = false;
    for (int j = 0; j < n; ++j)
      if (G.table[i][j] == G.id_index) has_inv = true;
    if (!has_inv) throw std::logic_error("full group: missing inverse");
  }
  if (G.table[G.j_index][G.j_index] != G.id_index)
    throw std::logic_error("full group: j^2 != 1");
  auto assoc = [&](int a, int b, int c2) {
    return G.table[G.table[a][b]][c2] == G.table[a][G.table[b][c2]];
  };
  if (n <= 128) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c2 = 0; c2 < n; ++c2)
          if (!assoc(a, b, c2))
            throw std::logic_error("full group: associativity fails");
  } else {
    std::mt19937 rng(12345);
    for (int t = 0; t < 5000; ++t)
      if (!assoc((int)(rng() % n), (int)(rng() % n), (int)(rng() % n)))
        throw std::logic_error("full group: associativity fails");
  }
  return G;
}

}  // namespace modaut
