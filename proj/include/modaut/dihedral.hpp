#pragma once

#include <optional>

#include "modaut/curves.hpp"

namespace modaut {

// Even model obtained by diagonalizing an extra involution: after the
// coordinate change the curve is y^2 = g_lead x^{2g+2} + ... + g_0 with only
// even powers. We keep b_j := g_{2(g+1-j)}/g_lead and mu_pow := g_0/g_lead;
// the fully normalized model x^{2g+2} + a_1 x^{2g} + ... + a_g x^2 + 1 has
// a_j = b_j mu^{-j} where mu^{g+1} = mu_pow. The dihedral invariants only
// involve powers of mu^{g+1}, so they are computable without extracting mu.
struct SymmetricModel {
  int genus = 0;
  std::vector<QuadElem> b;  // b_1..b_g
  QuadElem mu_pow;
};

struct SymmetricModelF {
  int genus = 0;
  FieldPtr field;
  std::vector<FFElem> b;
  FFElem mu_pow;
};

// Diagonalize the involution (eigenvalue sqrt(a^2+bc) may live in a
// quadratic extension / field extension) and reduce to the even model.
// Errors: M not a non-trivial involution, or not a symmetry of f.
SymmetricModel normalize_exact(const std::vector<QuadElem>& f,
                               const std::array<QuadElem, 4>& M);
SymmetricModelF normalize_mod(const FqVec& f, const PGLElem& M);

// a_1..a_g of the unit-scaled model; exact version returns nullopt when the
// (g+1)-th root of mu_pow does not lie in the quadratic field.
std::optional<std::vector<QuadElem>> symmetric_coeffs(const SymmetricModel& m);
// finite-field version extends the field when necessary
std::pair<FieldPtr, std::vector<FFElem>> symmetric_coeffs_mod(
    const SymmetricModelF& m);

// u_i = a_1^{g-i+1} a_i + a_g^{g-i+1} a_{g-i+1}, i = 1..g
std::vector<QuadElem> dihedral_u(const SymmetricModel& m);
std::vector<FFElem> dihedral_u_mod(const SymmetricModelF& m);

// classification outcome: every table row whose condition is satisfied
struct Classification {
  std::vector<std::string> groups;      // full automorphism group labels
  std::vector<std::string> conditions;  // matching condition identifiers
};

// ---- generic classification predicates ----

inline Rational dom_int(const RationalDom&, long n) { return Rational(n); }
inline QuadElem dom_int(const QuadDom&, long n) { return QuadElem(Rational(n)); }
inline FFElem dom_int(const FFDom& d, long n) {
  long p = (long)d.F->p();
  long m = n % p;
  if (m < 0) m += p;
  return ff_const(d.F, (uint64_t)m);
}

// Genus 2 with extra involution: groups as functions of (u_1, u_2) and the
// characteristic (0 in the exact case).
template <class D>
Classification genus2_classify(const D& d, const typename D::Elem& u1,
                               const typename D::Elem& u2, uint64_t p) {
  using E = typename D::Elem;
  Classification out;
  auto push = [&](const char* g, const char* c) {
    out.groups.push_back(g);
    out.conditions.push_back(c);
  };
  bool z1 = d.is_zero(u1), z2 = d.is_zero(u2);
  bool pt6750 = d.eq(u1, dom_int(d, 6750)) && d.eq(u2, dom_int(d, 450));
  if ((z1 && z2) || pt6750) push("V6", "(u1,u2) in {(0,0),(6750,450)}");
  if (d.eq(u1, dom_int(d, -250)) && d.eq(u2, dom_int(d, 50))) {
    if (p == 5)
      push("B", "(u1,u2)=(-250,50), p=5");
    else
      push("GL(2,3)", "(u1,u2)=(-250,50), p!=5");
  }
  // u2^2 - 220 u2 - 16 u1 + 4500 = 0; the special points (6750,450) and
  // (-250,50) lie on this locus but carry the larger groups above
  E d6 = d.add(d.sub(d.mul(u2, u2), d.mul(dom_int(d, 220), u2)),
               d.sub(dom_int(d, 4500), d.mul(dom_int(d, 16), u1)));
  bool bigger = pt6750 || (d.eq(u1, dom_int(d, -250)) && d.eq(u2, dom_int(d, 50)));
  if (d.is_zero(d6) && !bigger) push("D6", "u2^2-220u2-16u1+4500=0");
  // 2 u1^2 - u2^3 = 0 with u2 outside {0,2,18,50,450}
  E d4 = d.sub(d.mul(dom_int(d, 2), d.mul(u1, u1)),
               d.mul(u2, d.mul(u2, u2)));
  bool special = false;
  for (long v : {0L, 2L, 18L, 50L, 450L})
    if (d.eq(u2, dom_int(d, v))) special = true;
  if (d.is_zero(d4) && !special) push("D4", "2u1^2-u2^3=0, u2 generic");
  return out;
}

// Genus 3 rows. Conditions follow the invariant-theoretic forms
// 2u1 -/+ u3^2 = 0 (consistent with the factor table and the (Z/2)^2
// criterion 2^{g-1}u1^2 = u_g^{g+1}); E2 is cleared of denominators so the
// predicate stays meaningful in small characteristic.
template <class D>
Classification genus3_classify(const D& d, const typename D::Elem& u1,
                               const typename D::Elem& u2,
                               const typename D::Elem& u3,
                               const typename D::Elem& a1,
                               const typename D::Elem& a2,
                               const typename D::Elem& a3, uint64_t p) {
  (void)p;
  using E = typename D::Elem;
  Classification out;
  auto push = [&](const char* g, const char* c) {
    out.groups.push_back(g);
    out.conditions.push_back(c);
  };
  E u3sq = d.mul(u3, u3);
  E minus = d.sub(d.mul(dom_int(d, 2), u1), u3sq);  // 2u1 - u3^2
  E plus = d.add(d.mul(dom_int(d, 2), u1), u3sq);   // 2u1 + u3^2
  // E1 = 588 u2 - 5 (u3-8)(9 u3 - 1024)
  E e1 = d.sub(d.mul(dom_int(d, 588), u2),
               d.mul(dom_int(d, 5),
                     d.mul(d.sub(u3, dom_int(d, 8)),
                           d.sub(d.mul(dom_int(d, 9), u3),
                                 dom_int(d, 1024)))));
  // 72*E2 = 24696 u1 - 81 u3^3 - 31428 u3^2 + 1196032 u3 - 8388608
  E u3c = d.mul(u3sq, u3);
  E e2 = d.sub(d.mul(dom_int(d, 24696), u1), d.mul(dom_int(d, 81), u3c));
  e2 = d.sub(e2, d.mul(dom_int(d, 31428), u3sq));
  e2 = d.add(e2, d.mul(dom_int(d, 1196032), u3));
  e2 = d.sub(e2, dom_int(d, 8388608));
  bool E12 = d.is_zero(e1) && d.is_zero(e2);
  bool a13 = d.eq(a1, a3);
  bool a_all0 = d.is_zero(a1) && d.is_zero(a2) && d.is_zero(a3);

  if (d.is_zero(minus)) push("(Z/2)^3", "2u1-u3^2=0");
  if (d.is_zero(minus) && a13) push("Z/2xD4", "2u1-u3^2=0, a1=a3");
  if (d.is_zero(minus) && a_all0) push("V8", "2u1-u3^2=0, a1=a2=a3=0");
  // Z/2 x S4: (first-column alternative) and (special-value alternative)
  bool s4_first = (d.is_zero(minus) && a13) || E12;
  bool s4_pointA = d.is_zero(u1) && d.eq(u2, dom_int(d, 196)) && d.is_zero(u3);
  bool s4_pointB = d.eq(d.mul(dom_int(d, 81), u1), dom_int(d, 8192)) &&
                   d.eq(d.mul(dom_int(d, 27), u2), dom_int(d, -1280)) &&
                   d.eq(d.mul(dom_int(d, 8), u3), dom_int(d, 128));
  if (s4_first && (s4_pointA || s4_pointB))
    push("Z/2xS4", "(2u1-u3^2=0,a1=a3 or E1=E2=0) and special point");
  if (E12) push("D6", "E1=E2=0");
  if (d.is_zero(plus)) push("Z/2xZ/4", "2u1+u3^2=0");
  if ((d.is_zero(plus) || E12) && d.is_zero(u2))
    push("U6", "(2u1+u3^2=0 or E1=E2=0) and u2=0");
  return out;
}

}  // namespace modaut
