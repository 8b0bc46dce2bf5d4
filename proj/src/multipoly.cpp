#include "modaut/multipoly.hpp"

#include <numeric>
#include <sstream>

namespace modaut {

std::string mono_str(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < MP_MAX_VARS; ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += (size_t)i < names.size() ? names[i] : "x" + std::to_string(i);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

UniPoly<PolyDom<RationalDom>> mp_to_recursive(const MPoly<RationalDom>& f,
                                              int main, int sub) {
  UniPoly<PolyDom<RationalDom>> out;
  for (auto& t : f) {
    for (int i = 0; i < MP_MAX_VARS; ++i)
      if (t.m.e[i] && i != main && i != sub)
        throw std::domain_error("mp_to_recursive: extra variable present");
    size_t dm = t.m.e[main], ds = t.m.e[sub];
    if (out.size() <= dm) out.resize(dm + 1);
    if (out[dm].size() <= ds) out[dm].resize(ds + 1, Rational(0));
    out[dm][ds] += t.c;
  }
  RationalDom Q;
  for (auto& c : out) ptrim(Q, c);
  PolyDom<RationalDom> P;
  ptrim(P, out);
  return out;
}

FFPoly reduce_mpoly(const MPoly<RationalDom>& f, const ExtField* F,
                    const MonomialOrder& ord) {
  const Zp& z = F->zp;
  FFPoly out;
  for (auto& t : f) {
    FpVec v = reduce_rational_poly(z, {t.c});
    uint64_t c = v.empty() ? 0 : v[0];
    if (!c) continue;
    out.push_back(MTerm<FFDom>{t.m, ff_const(F, c)});
  }
  FFDom d{F};
  mp_normalize(d, ord, out);
  return out;
}

namespace {

struct Leaf {
  FieldPtr field;
  std::vector<FFElem> coords;  // aligned with the active variable list
};

// distinct roots of a monic univariate polynomial over F, each in the
// smallest extension containing it
std::vector<Leaf> univ_roots(const FieldPtr& F, const FqVec& g,
                             unsigned ext_cap, bool& truncated) {
  std::vector<Leaf> out;
  uint64_t p = F->p();
  for (auto& fa : factor_ff(g)) {
    unsigned dd = (unsigned)fq::deg(fa.factor);
    if (dd == 0) continue;
    if (dd == 1) {
      out.push_back({F, {-fa.factor[0]}});
      continue;
    }
    unsigned K = F->k * dd;
    if (K > ext_cap) {
      truncated = true;
      continue;
    }
    FieldPtr T = make_ext(p, K);
    FqVec lifted;
    for (auto& c : fa.factor) lifted.push_back(embed(c, T.get()));
    for (auto& lf : factor_ff(lifted)) {
      if (fq::deg(lf.factor) != 1)
        throw std::logic_error("univ_roots: factor failed to split");
      out.push_back({T, {-lf.factor[0]}});
    }
  }
  return out;
}

std::vector<FFPoly> lift_gens(const std::vector<FFPoly>& gens,
                              const ExtField* T, const MonomialOrder& ord) {
  FFDom d{T};
  std::vector<FFPoly> out;
  for (auto& g : gens) {
    FFPoly h;
    for (auto& t : g) h.push_back(MTerm<FFDom>{t.m, embed(t.c, T)});
    mp_normalize(d, ord, h);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Leaf> solve_rec(const FieldPtr& F, std::vector<FFPoly> gens,
                            const std::vector<int>& vars, unsigned ext_cap,
                            bool& truncated) {
  FFDom d{F.get()};
  MonomialOrder ord;
  ord.kind = MonomialOrder::lex;
  ord.perm.assign(vars.rbegin(), vars.rend());  // vars[0] is lowest
  for (auto& g : gens) mp_normalize(d, ord, g);
  gens.erase(std::remove_if(gens.begin(), gens.end(),
                            [](const FFPoly& g) { return g.empty(); }),
             gens.end());
  for (auto& g : gens)
    if (g.size() == 1 && g[0].m.deg() == 0) return {};  // nonzero constant
  if (vars.empty()) return {{F, {}}};
  if (gens.empty())
    throw std::domain_error("variety: positive-dimensional system");

  auto gb = buchberger(d, ord, gens).basis;
  if (gb.size() == 1 && gb[0].size() == 1 && gb[0][0].m.deg() == 0) return {};

  int low = vars[0];
  const FFPoly* uni = nullptr;
  for (auto& g : gb) {
    bool pure = true;
    for (int i = 0; i < MP_MAX_VARS; ++i)
      if (i != low && g[0].m.e[i]) pure = false;
    if (pure && g[0].m.e[low]) {
      uni = &g;
      break;
    }
  }
  if (!uni) throw std::domain_error("variety: positive-dimensional system");

  FqVec u((*uni)[0].m.e[low] + 1, ff_zero(F.get()));
  for (auto& t : *uni) u[t.m.e[low]] = t.c;
  fq::trim(u);

  std::vector<int> rest(vars.begin() + 1, vars.end());
  std::vector<Leaf> out;
  for (auto& br : univ_roots(F, u, ext_cap, truncated)) {
    std::vector<FFPoly> lifted =
        br.field.get() == F.get() ? gb : lift_gens(gb, br.field.get(), ord);
    FFDom dt{br.field.get()};
    for (auto& g : lifted) g = mp_subst_var(dt, g, low, br.coords[0], ord);
    for (auto& leaf : solve_rec(br.field, lifted, rest, ext_cap, truncated)) {
      Leaf l;
      l.field = leaf.field;
      l.coords.push_back(embed(br.coords[0], leaf.field.get()));
      for (auto& c : leaf.coords) l.coords.push_back(c);
      out.push_back(std::move(l));
    }
  }
  return out;
}

}  // namespace

Variety variety_fp(const std::vector<FFPoly>& gens, const std::vector<int>& vars,
                   const ExtField* base, unsigned ext_cap) {
  FieldPtr F = make_ext(base->p(), base->k);
  bool truncated = false;
  std::vector<FFPoly> local = gens;
  if (F.get() != base) {
    MonomialOrder ord;
    ord.kind = MonomialOrder::lex;
    ord.perm.assign(vars.rbegin(), vars.rend());
    local = lift_gens(gens, F.get(), ord);
  }
  auto leaves = solve_rec(F, local, vars, ext_cap, truncated);

  Variety out;
  out.truncated = truncated;
  unsigned L = 1;
  for (auto& l : leaves) L = std::lcm(L, l.field->k);
  if (L > 64)
    throw std::domain_error("variety: compositum degree exceeds 64");
  out.field = make_ext(base->p(), L);
  for (auto& l : leaves) {
    std::vector<FFElem> pt;
    for (auto& c : l.coords) pt.push_back(embed(c, out.field.get()));
    out.points.push_back(std::move(pt));
  }
  return out;
}

long count_points(const std::vector<FFPoly>& gens, const std::vector<int>& vars,
                  const ExtField* base, unsigned ext_cap) {
  FieldPtr F = make_ext(base->p(), base->k);
  bool truncated = false;
  std::vector<FFPoly> local = gens;
  if (F.get() != base) {
    MonomialOrder ord;
    ord.kind = MonomialOrder::lex;
    ord.perm.assign(vars.rbegin(), vars.rend());
    local = lift_gens(gens, F.get(), ord);
  }
  auto leaves = solve_rec(F, local, vars, ext_cap, truncated);
  if (truncated)
    throw std::domain_error("count_points: extension cap exceeded");
  return (long)leaves.size();
}

}  // namespace modaut
