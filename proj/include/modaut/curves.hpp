#pragma once

#include <variant>

#include "modaut/moebius.hpp"
#include "modaut/unipoly.hpp"

namespace modaut {

// Printed modular automorphism of a model: (x,y) -> (M(x), e*y/(cx+d)^{g+1}).
// Matrix entries are used exactly as printed (no projective rescaling), so
// the y-scale e matches the printed denominator. Entries live in Q or Q(i).
struct ModularAuto {
  std::string name;
  std::array<QuadElem, 4> matrix;  // a, b, c, d
  std::string y_action;            // as printed, e.g. "8y/x^3"
  QuadElem y_scale;                // the constant e
};

struct CatalogueEntry {
  int N = 0;
  int genus = 0;
  std::vector<Rational> f;        // y^2 = f(x), integer coefficients
  std::vector<Rational> char2_q;  // y^2 + q y = p model (N odd), over Z
  std::vector<Rational> char2_p;
  std::vector<ModularAuto> autos;
  BigInt disc;  // discriminant of f
};

// The 19 hyperelliptic levels, ascending.
const std::vector<int>& hyperelliptic_levels();

// Catalogue lookup; throws for non-hyperelliptic N.
const CatalogueEntry& catalogue(int N);

// Override the bundled catalogue file; must happen before the first lookup.
void set_catalogue_path(const std::string& path);

// Symbolic self-consistency of one printed automorphism:
// f(M(x)) (cx+d)^{2g+2} == e^2 f(x) over Q (or Q(i)).
bool modular_auto_consistent(const CatalogueEntry& e, const ModularAuto& w);

struct OddCharCurve {
  FieldPtr field;  // prime field F_p, p odd
  FqVec f;         // squarefree, degree 2g+2
  int genus = 0;
};

struct Char2Curve {
  FieldPtr field;  // F_2
  FqVec q, p;      // y^2 + q(x) y = p(x); deg q <= g+1, deg p <= 2g+1
  int genus = 0;
};

using ReducedCurve = std::variant<OddCharCurve, Char2Curve>;

// Reduction of the model at a good prime. Errors: p | N (bad reduction),
// odd p | disc (singular model), p = 2 with N even (no model).
ReducedCurve reduce_mod(int N, uint64_t p);

struct BranchLocus {
  FieldPtr field;                 // splitting field of f
  std::vector<ProjPoint> points;  // affine roots, plus inf iff deg f odd
};

BranchLocus branch_locus(const OddCharCurve& c);

}  // namespace modaut
