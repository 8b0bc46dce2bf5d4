#pragma once

#include <array>
#include <string>

#include "modaut/unipoly.hpp"

namespace modaut {

// Sparse multivariate polynomials over a small fixed variable set. Twelve
// slots cover the largest systems handled here (a,b,c,d plus invariant and
// auxiliary variables).
constexpr int MP_MAX_VARS = 12;

struct Monomial {
  std::array<uint16_t, MP_MAX_VARS> e{};

  unsigned deg() const {
    unsigned s = 0;
    for (auto v : e) s += v;
    return s;
  }
};

inline bool operator==(const Monomial& a, const Monomial& b) {
  return a.e == b.e;
}
inline bool operator!=(const Monomial& a, const Monomial& b) {
  return !(a == b);
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
  for (int i = 0; i < MP_MAX_VARS; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < MP_MAX_VARS; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {  // a / b
  Monomial r;
  for (int i = 0; i < MP_MAX_VARS; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < MP_MAX_VARS; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial mono_var(int v, unsigned k = 1) {
  Monomial r;
  r.e[v] = (uint16_t)k;
  return r;
}

// Monomial order over the variables perm[0] > perm[1] > ... > perm.back().
struct MonomialOrder {
  enum Kind { lex, grevlex } kind = lex;
  std::vector<int> perm;  // most significant first; size = active var count

  // negative if a < b, 0 if equal, positive if a > b
  int cmp(const Monomial& a, const Monomial& b) const {
    if (kind == grevlex) {
      unsigned da = 0, db = 0;
      for (int v : perm) {
        da += a.e[v];
        db += b.e[v];
      }
      if (da != db) return da < db ? -1 : 1;
      for (size_t i = perm.size(); i-- > 0;) {
        int v = perm[i];
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
      }
      return 0;
    }
    for (int v : perm) {
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
  }
};

template <class D>
struct MTerm {
  Monomial m;
  typename D::Elem c;
};

// Terms sorted strictly descending under the active order; no zero terms.
template <class D>
using MPoly = std::vector<MTerm<D>>;

template <class D>
void mp_normalize(const D& d, const MonomialOrder& ord, MPoly<D>& f) {
  std::sort(f.begin(), f.end(),
            [&](const MTerm<D>& x, const MTerm<D>& y) {
              return ord.cmp(x.m, y.m) > 0;
            });
  MPoly<D> out;
  for (auto& t : f) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c = d.add(out.back().c, t.c);
    else
      out.push_back(t);
    if (!out.empty() && d.is_zero(out.back().c)) out.pop_back();
  }
  f = std::move(out);
}

template <class D>
MPoly<D> mp_const(const D& d, const typename D::Elem& c) {
  if (d.is_zero(c)) return {};
  return {MTerm<D>{Monomial{}, c}};
}

template <class D>
MPoly<D> mp_var(const D& d, int v) {
  return {MTerm<D>{mono_var(v), d.one()}};
}

template <class D>
MPoly<D> mp_add(const D& d, const MPoly<D>& a, const MPoly<D>& b,
                const MonomialOrder& ord) {
  MPoly<D> r = a;
  r.insert(r.end(), b.begin(), b.end());
  mp_normalize(d, ord, r);
  return r;
}

template <class D>
MPoly<D> mp_neg(const D& d, MPoly<D> a) {
  for (auto& t : a) t.c = d.neg(t.c);
  return a;
}

template <class D>
MPoly<D> mp_sub(const D& d, const MPoly<D>& a, const MPoly<D>& b,
                const MonomialOrder& ord) {
  return mp_add(d, a, mp_neg(d, b), ord);
}

template <class D>
MPoly<D> mp_mul(const D& d, const MPoly<D>& a, const MPoly<D>& b,
                const MonomialOrder& ord) {
  MPoly<D> r;
  r.reserve(a.size() * b.size());
  for (auto& x : a)
    for (auto& y : b)
      r.push_back(MTerm<D>{mono_mul(x.m, y.m), d.mul(x.c, y.c)});
  mp_normalize(d, ord, r);
  return r;
}

template <class D>
MPoly<D> mp_scal(const D& d, MPoly<D> a, const typename D::Elem& c) {
  if (d.is_zero(c)) return {};
  for (auto& t : a) t.c = d.mul(t.c, c);
  return a;
}

template <class D>
MPoly<D> mp_term_mul(const D& d, const MPoly<D>& a, const Monomial& m,
                     const typename D::Elem& c) {
  MPoly<D> r;
  r.reserve(a.size());
  for (auto& t : a) r.push_back(MTerm<D>{mono_mul(t.m, m), d.mul(t.c, c)});
  return r;  // order preserved: multiplication by a term is monotone
}

template <class D>
bool mp_eq(const D& d, const MPoly<D>& a, const MPoly<D>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].m != b[i].m || !d.eq(a[i].c, b[i].c)) return false;
  return true;
}

// substitute variable v := value (a constant of the coefficient domain)
template <class D>
MPoly<D> mp_subst_var(const D& d, const MPoly<D>& f, int v,
                      const typename D::Elem& value,
                      const MonomialOrder& ord) {
  MPoly<D> r;
  for (auto& t : f) {
    MTerm<D> u = t;
    typename D::Elem pw = d.one();
    for (unsigned i = 0; i < t.m.e[v]; ++i) pw = d.mul(pw, value);
    u.c = d.mul(u.c, pw);
    u.m.e[v] = 0;
    r.push_back(std::move(u));
  }
  mp_normalize(d, ord, r);
  return r;
}

template <class D>
bool mp_uses_only(const MPoly<D>& f, const std::vector<int>& vars) {
  for (auto& t : f)
    for (int i = 0; i < MP_MAX_VARS; ++i) {
      if (!t.m.e[i]) continue;
      if (std::find(vars.begin(), vars.end(), i) == vars.end()) return false;
    }
  return true;
}

std::string mono_str(const Monomial& m, const std::vector<std::string>& names);

inline std::string coeff_str(const Rational& q) { return q.get_str(); }
inline std::string coeff_str(const FFElem& e) { return e.str(); }
inline std::string coeff_str(const QuadElem& e) { return e.str(); }

template <class D>
std::string mp_str(const D&, const MPoly<D>& f,
                   const std::vector<std::string>& names) {
  if (f.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += " + ";
    s += coeff_str(f[i].c);
    std::string ms = mono_str(f[i].m, names);
    if (!ms.empty()) s += "*" + ms;
  }
  return s;
}

// ---- polynomial reduction and Buchberger ----

// Full normal form of f against basis. If cof is non-null it must have one
// entry per basis element; the quotients are accumulated so that
// f = sum cof[i]*basis[i] + result.
template <class D>
MPoly<D> normal_form(const D& d, const MonomialOrder& ord, MPoly<D> f,
                     const std::vector<MPoly<D>>& basis,
                     std::vector<MPoly<D>>* cof = nullptr) {
  MPoly<D> rem;
  while (!f.empty()) {
    bool reduced = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].empty()) continue;
      if (!mono_divides(basis[i][0].m, f[0].m)) continue;
      Monomial q = mono_div(f[0].m, basis[i][0].m);
      typename D::Elem fac = d.divexact(f[0].c, basis[i][0].c);
      f = mp_sub(d, f, mp_term_mul(d, basis[i], q, fac), ord);
      if (cof) {
        MPoly<D> t{MTerm<D>{q, fac}};
        (*cof)[i] = mp_add(d, (*cof)[i], t, ord);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(f[0]);
      f.erase(f.begin());
    }
  }
  return rem;
}

namespace detail {

template <class D>
struct GBItem {
  MPoly<D> p;
  std::vector<MPoly<D>> cof;  // representation in terms of input generators
};

// S-polynomial together with its cofactor bookkeeping
template <class D>
GBItem<D> spoly(const D& d, const MonomialOrder& ord, const GBItem<D>& f,
                const GBItem<D>& g, bool track) {
  Monomial L = mono_lcm(f.p[0].m, g.p[0].m);
  Monomial qf = mono_div(L, f.p[0].m), qg = mono_div(L, g.p[0].m);
  typename D::Elem cf = d.divexact(d.one(), f.p[0].c);
  typename D::Elem cg = d.divexact(d.one(), g.p[0].c);
  GBItem<D> out;
  out.p = mp_sub(d, mp_term_mul(d, f.p, qf, cf), mp_term_mul(d, g.p, qg, cg),
                 ord);
  if (track) {
    out.cof.resize(f.cof.size());
    for (size_t i = 0; i < f.cof.size(); ++i)
      out.cof[i] = mp_sub(d, mp_term_mul(d, f.cof[i], qf, cf),
                          mp_term_mul(d, g.cof[i], qg, cg), ord);
  }
  return out;
}

}  // namespace detail

template <class D>
struct GroebnerResult {
  std::vector<MPoly<D>> basis;                  // reduced, monic, sorted
  std::vector<std::vector<MPoly<D>>> cofactors;  // per basis element, if asked
};

// Buchberger with the normal pair-selection strategy and the two classical
// criteria, followed by autoreduction to the unique reduced basis.
template <class D>
GroebnerResult<D> buchberger(const D& d, const MonomialOrder& ord,
                             const std::vector<MPoly<D>>& gens,
                             bool track_cofactors = false) {
  using Item = detail::GBItem<D>;
  std::vector<Item> G;
  for (size_t i = 0; i < gens.size(); ++i) {
    MPoly<D> g = gens[i];
    mp_normalize(d, ord, g);
    Item it;
    if (track_cofactors) {
      it.cof.assign(gens.size(), {});
      it.cof[i] = mp_const(d, d.one());
    }
    if (g.empty()) continue;
    it.p = std::move(g);
    G.push_back(std::move(it));
  }

  struct Pair {
    size_t i, j;
    Monomial lcm;
    bool done = false;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, mono_lcm(G[i].p[0].m, G[j].p[0].m), false});
  };
  for (size_t j = 0; j < G.size(); ++j) add_pairs(j);

  auto pair_pending = [&](size_t a, size_t b) {
    for (auto& q : pairs)
      if (!q.done && ((q.i == a && q.j == b) || (q.i == b && q.j == a)))
        return true;
    return false;
  };

  while (true) {
    // normal strategy: smallest lcm under the order
    int best = -1;
    for (size_t t = 0; t < pairs.size(); ++t) {
      if (pairs[t].done) continue;
      if (best < 0 || ord.cmp(pairs[t].lcm, pairs[best].lcm) < 0)
        best = (int)t;
    }
    if (best < 0) break;
    Pair pr = pairs[best];
    pairs[best].done = true;
    // first criterion: coprime leading monomials
    if (pr.lcm == mono_mul(G[pr.i].p[0].m, G[pr.j].p[0].m)) continue;
    // chain criterion: some k with LM_k | lcm and both mixed pairs settled
    bool chained = false;
    for (size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(G[k].p[0].m, pr.lcm)) continue;
      if (!pair_pending(pr.i, k) && !pair_pending(pr.j, k)) chained = true;
    }
    if (chained) continue;

    Item s = detail::spoly(d, ord, G[pr.i], G[pr.j], track_cofactors);
    std::vector<MPoly<D>> bases;
    bases.reserve(G.size());
    for (auto& it : G) bases.push_back(it.p);
    std::vector<MPoly<D>> cof;
    if (track_cofactors) cof.assign(G.size(), {});
    MPoly<D> h = normal_form(d, ord, std::move(s.p), bases,
                             track_cofactors ? &cof : nullptr);
    if (h.empty()) continue;
    Item ni;
    ni.p = std::move(h);
    if (track_cofactors) {
      ni.cof = std::move(s.cof);
      for (size_t k = 0; k < G.size(); ++k) {
        for (size_t t = 0; t < ni.cof.size(); ++t) {
          MPoly<D> part = mp_mul(d, cof[k], G[k].cof[t], ord);
          ni.cof[t] = mp_sub(d, ni.cof[t], part, ord);
        }
      }
    }
    G.push_back(std::move(ni));
    add_pairs(G.size() - 1);
  }

  // minimalize: drop elements whose LM is divisible by another LM
  std::vector<char> keep(G.size(), 1);
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = 0; j < G.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (mono_divides(G[j].p[0].m, G[i].p[0].m) &&
          (G[j].p[0].m != G[i].p[0].m || j < i))
        keep[i] = 0;
    }
  std::vector<Item> M;
  for (size_t i = 0; i < G.size(); ++i)
    if (keep[i]) M.push_back(std::move(G[i]));

  // autoreduce: fully reduce each element against the others
  for (size_t i = 0; i < M.size(); ++i) {
    std::vector<MPoly<D>> others;
    std::vector<size_t> idx;
    for (size_t j = 0; j < M.size(); ++j)
      if (j != i) {
        others.push_back(M[j].p);
        idx.push_back(j);
      }
    std::vector<MPoly<D>> cof;
    if (track_cofactors) cof.assign(others.size(), {});
    M[i].p = normal_form(d, ord, std::move(M[i].p), others,
                         track_cofactors ? &cof : nullptr);
    if (track_cofactors) {
      for (size_t k = 0; k < others.size(); ++k)
        for (size_t t = 0; t < M[i].cof.size(); ++t) {
          MPoly<D> part = mp_mul(d, cof[k], M[idx[k]].cof[t], ord);
          M[i].cof[t] = mp_sub(d, M[i].cof[t], part, ord);
        }
    }
  }
  // monic + deterministic ordering by leading monomial
  for (auto& it : M) {
    typename D::Elem inv = d.divexact(d.one(), it.p[0].c);
    it.p = mp_scal(d, std::move(it.p), inv);
    if (track_cofactors)
      for (auto& c : it.cof) c = mp_scal(d, std::move(c), inv);
  }
  std::sort(M.begin(), M.end(), [&](const Item& x, const Item& y) {
    return ord.cmp(x.p[0].m, y.p[0].m) < 0;
  });

  GroebnerResult<D> out;
  for (auto& it : M) {
    out.basis.push_back(std::move(it.p));
    if (track_cofactors) out.cofactors.push_back(std::move(it.cof));
  }
  return out;
}

// Is the ideal zero-dimensional over the given active variables? (Every
// variable must appear as a pure power among the leading monomials.)
template <class D>
bool is_zero_dimensional(const std::vector<MPoly<D>>& basis,
                         const std::vector<int>& vars) {
  for (int v : vars) {
    bool found = false;
    for (auto& g : basis) {
      if (g.empty()) continue;
      const Monomial& lm = g[0].m;
      if (!lm.e[v]) continue;
      bool pure = true;
      for (int i = 0; i < MP_MAX_VARS; ++i)
        if (i != v && lm.e[i]) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Elimination ideal generators: lex basis with the kept variables lowest,
// filtered to polynomials in the kept variables only.
template <class D>
std::vector<MPoly<D>> eliminate(const D& d, const std::vector<MPoly<D>>& gens,
                                const std::vector<int>& drop,
                                const std::vector<int>& keep) {
  MonomialOrder ord;
  ord.kind = MonomialOrder::lex;
  ord.perm = drop;
  ord.perm.insert(ord.perm.end(), keep.begin(), keep.end());
  auto gb = buchberger(d, ord, gens);
  std::vector<MPoly<D>> out;
  for (auto& g : gb.basis)
    if (mp_uses_only(g, keep)) out.push_back(g);
  return out;
}

// recursive view: f as a univariate polynomial in `main` whose coefficients
// are univariate polynomials in `sub` (all other variables must be absent)
UniPoly<PolyDom<RationalDom>> mp_to_recursive(const MPoly<RationalDom>& f,
                                              int main, int sub);

// ---- concrete variety routines over F_p (multipoly.cpp) ----

using FFPoly = MPoly<FFDom>;

struct Variety {
  FieldPtr field;  // compositum containing all coordinates
  std::vector<std::vector<FFElem>> points;  // each of size vars.size()
  bool truncated = false;  // some branch exceeded the extension cap
};

// All closure points of the system, coordinates embedded into one common
// extension field of degree <= ext_cap over F_p.
Variety variety_fp(const std::vector<FFPoly>& gens, const std::vector<int>& vars,
                   const ExtField* base, unsigned ext_cap = 24);

// Number of distinct closure points of a zero-dimensional ideal.
long count_points(const std::vector<FFPoly>& gens, const std::vector<int>& vars,
                  const ExtField* base, unsigned ext_cap = 24);

// reduce a rational-coefficient polynomial mod p
FFPoly reduce_mpoly(const MPoly<RationalDom>& f, const ExtField* F,
                    const MonomialOrder& ord);

}  // namespace modaut
