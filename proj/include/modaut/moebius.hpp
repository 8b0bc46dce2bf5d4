#pragma once

#include <array>

#include "modaut/fqpoly.hpp"

namespace modaut {

// Point of P^1(F_q): an affine value or the point at infinity.
struct ProjPoint {
  bool inf = false;
  FFElem x;  // meaningful iff !inf

  ProjPoint() = default;
  explicit ProjPoint(FFElem v) : inf(false), x(std::move(v)) {}
  static ProjPoint infinity() {
    ProjPoint p;
    p.inf = true;
    return p;
  }
  std::string str() const;
};

bool operator==(const ProjPoint& a, const ProjPoint& b);
inline bool operator!=(const ProjPoint& a, const ProjPoint& b) {
  return !(a == b);
}
bool point_less(const ProjPoint& a, const ProjPoint& b);  // inf sorts last

// Element of PGL(2, F_q) acting by x -> (ax+b)/(cx+d). Canonically scaled:
// the first nonzero entry among (a,b,c,d) is 1, so equality is entry-wise.
struct PGLElem {
  FFElem a, b, c, d;

  PGLElem() = default;
  PGLElem(FFElem aa, FFElem bb, FFElem cc, FFElem dd);  // scales; det != 0

  const ExtField* field() const { return a.F; }
  FFElem det() const { return a * d - b * c; }
  std::string str() const;
};

bool operator==(const PGLElem& a, const PGLElem& b);
inline bool operator!=(const PGLElem& a, const PGLElem& b) { return !(a == b); }
bool pgl_less(const PGLElem& a, const PGLElem& b);

PGLElem pgl_identity(const ExtField* F);
PGLElem pgl_mul(const PGLElem& m, const PGLElem& n);  // composition m after n
PGLElem pgl_inv(const PGLElem& m);

ProjPoint act(const PGLElem& m, const ProjPoint& p);

// The unique M with act(M, src[i]) = dst[i]; each triple pairwise distinct.
PGLElem from_triples(const std::array<ProjPoint, 3>& src,
                     const std::array<ProjPoint, 3>& dst);

// f^*_M: monic polynomial whose roots are the preimages under M of the roots
// of f, omitting any root sent from a/c. multiplier is the constant with
// f((ax+b)/(cx+d)) (cx+d)^{deg f} = multiplier * fstar(x); degree_drop marks
// the omitted-root case (some root rho of f has c*rho = a).
struct Pullback {
  FqVec fstar;
  FFElem multiplier;
  bool degree_drop = false;
};

Pullback pullback(const FqVec& f, const PGLElem& m);

}  // namespace modaut
