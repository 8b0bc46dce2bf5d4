#include "modaut/curves.hpp"

#include <fstream>
#include <json.hpp>
#include <map>
#include <mutex>

namespace modaut {

namespace {

QuadElem parse_entry(const std::string& s) {
  bool neg = !s.empty() && s[0] == '-';
  std::string body = neg ? s.substr(1) : s;
  QuadElem v;
  if (body == "i")
    v = QuadElem(-1, Rational(0), Rational(1));
  else
    v = QuadElem(Rational(body));
  return neg ? -v : v;
}

std::string& catalogue_path() {
  static std::string path = std::string(MODAUT_DATA_DIR) + "/catalogue.json";
  return path;
}

std::map<int, CatalogueEntry> load_catalogue() {
  std::ifstream in(catalogue_path());
  if (!in) throw std::runtime_error("catalogue file not found: " + catalogue_path());
  nlohmann::json j;
  in >> j;
  std::map<int, CatalogueEntry> out;
  RationalDom Q;
  for (auto& rec : j.at("curves")) {
    CatalogueEntry e;
    e.N = rec.at("N").get<int>();
    e.genus = rec.at("genus").get<int>();
    for (auto& c : rec.at("f_coeffs")) e.f.emplace_back(c.get<long>());
    if (rec.contains("char2_q_coeffs")) {
      for (auto& c : rec.at("char2_q_coeffs"))
        e.char2_q.emplace_back(c.get<long>());
      for (auto& c : rec.at("char2_p_coeffs"))
        e.char2_p.emplace_back(c.get<long>());
    }
    for (auto& a : rec.at("autos")) {
      ModularAuto w;
      w.name = a.at("name").get<std::string>();
      auto& m = a.at("matrix");
      for (int i = 0; i < 4; ++i)
        w.matrix[i] = parse_entry(m.at(i).get<std::string>());
      w.y_action = a.at("y_action").get<std::string>();
      w.y_scale = parse_entry(a.at("y_scale").get<std::string>());
      e.autos.push_back(std::move(w));
    }
    if ((int)e.f.size() != 2 * e.genus + 3)
      throw std::runtime_error("catalogue: genus/degree mismatch");
    Rational d = discriminant(Q, e.f);
    e.disc = numerator(d);  // integer coefficients, integral discriminant
    if (e.disc == 0) throw std::runtime_error("catalogue: f not squarefree");
    out[e.N] = std::move(e);
  }
  return out;
}

const std::map<int, CatalogueEntry>& catalogue_map() {
  static const std::map<int, CatalogueEntry> m = load_catalogue();
  return m;
}

}  // namespace

const std::vector<int>& hyperelliptic_levels() {
  static const std::vector<int> levels = [] {
    std::vector<int> v;
    for (auto& [n, e] : catalogue_map()) v.push_back(n);
    return v;
  }();
  return levels;
}

const CatalogueEntry& catalogue(int N) {
  auto& m = catalogue_map();
  auto it = m.find(N);
  if (it == m.end())
    throw std::domain_error("X_0(" + std::to_string(N) +
                            ") is not hyperelliptic");
  return it->second;
}

void set_catalogue_path(const std::string& path) { catalogue_path() = path; }

bool modular_auto_consistent(const CatalogueEntry& e, const ModularAuto& w) {
  QuadDom D;
  UniPoly<QuadDom> f;
  for (auto& c : e.f) f.emplace_back(c);
  int s = pdeg(f);
  const QuadElem &a = w.matrix[0], &b = w.matrix[1], &c = w.matrix[2],
                 &d = w.matrix[3];
  UniPoly<QuadDom> num{b, a}, den{d, c};
  ptrim(D, num);
  ptrim(D, den);
  std::vector<UniPoly<QuadDom>> np(s + 1), dp(s + 1);
  np[0] = dp[0] = UniPoly<QuadDom>{D.one()};
  for (int i = 1; i <= s; ++i) {
    np[i] = pmul(D, np[i - 1], num);
    dp[i] = pmul(D, dp[i - 1], den);
  }
  UniPoly<QuadDom> P;
  for (int i = 0; i <= s; ++i) {
    if (D.is_zero(f[i])) continue;
    P = padd(D, P, pscal(D, pmul(D, np[i], dp[s - i]), f[i]));
  }
  UniPoly<QuadDom> rhs = pscal(D, f, w.y_scale * w.y_scale);
  return peq(D, P, rhs);
}

ReducedCurve reduce_mod(int N, uint64_t p) {
  const CatalogueEntry& e = catalogue(N);
  if (N % (int)p == 0 && p <= (uint64_t)N)
    throw std::domain_error("bad reduction: p divides N");
  if (p == 2) {
    if (N % 2 == 0)
      throw std::domain_error("no characteristic-2 model for even N");
    FieldPtr F2 = make_ext(2, 1);
    Zp z(2);
    Char2Curve c;
    c.field = F2;
    c.q = fq::from_fp(F2.get(), reduce_rational_poly(z, e.char2_q));
    c.p = fq::from_fp(F2.get(), reduce_rational_poly(z, e.char2_p));
    c.genus = e.genus;
    // smoothness: q and q'^2 p + p'^2 share no root in the closure
    FqVec qd = fq::deriv(c.q), pd = fq::deriv(c.p);
    FqVec crit = fq::add(fq::mul(fq::mul(qd, qd), c.p), fq::mul(pd, pd));
    if (fq::deg(fq::gcd(c.q, crit)) > 0)
      throw std::domain_error("singular model in characteristic 2");
    return c;
  }
  if (e.disc % BigInt((unsigned long)p) == 0)
    throw std::domain_error("singular model: p divides the discriminant");
  FieldPtr Fp = make_ext(p, 1);
  Zp z(p);
  OddCharCurve c;
  c.field = Fp;
  c.f = fq::from_fp(Fp.get(), reduce_rational_poly(z, e.f));
  c.genus = e.genus;
  FqVec g = fq::gcd(c.f, fq::deriv(c.f));
  if (fq::deg(g) > 0)
    throw std::domain_error("singular model: reduction not squarefree");
  return c;
}

BranchLocus branch_locus(const OddCharCurve& c) {
  FpVec f;
  for (auto& x : c.f) f.push_back(x.c[0]);
  fp::trim(f);
  SplitField sf = splitting_field(c.field->p(), f);
  BranchLocus out;
  out.field = sf.field;
  for (auto& r : sf.roots) out.points.emplace_back(r);
  // distinct points only (curve squarefree, but keep the contract explicit)
  std::sort(out.points.begin(), out.points.end(), point_less);
  out.points.erase(std::unique(out.points.begin(), out.points.end()),
                   out.points.end());
  if (fq::deg(c.f) % 2 == 1) out.points.push_back(ProjPoint::infinity());
  return out;
}

}  // namespace modaut
