#pragma once

#include "modaut/curves.hpp"

namespace modaut {

// Reduced automorphism: a Moebius map permuting the branch locus, together
// with the induced index permutation and the pullback constant C defined by
// f((ax+b)/(cx+d)) (cx+d)^{2g+2} = C f(x)  (f monic).
struct ReducedAut {
  PGLElem M;
  std::vector<int> perm;  // image index of each branch point
  FFElem multiplier;      // C
};

struct ReducedGroup {
  FieldPtr field;  // splitting field of f
  BranchLocus locus;
  std::vector<ReducedAut> elems;  // sorted by pgl_less
};

// Exact reduced group over the algebraic closure, found by branch-triple
// enumeration over the splitting field. Requires deg f = 2g+2 (even).
ReducedGroup reduced_group(const OddCharCurve& c);

// The constant C above; domain error when M is not a symmetry of f.
FFElem lift_constant(const PGLElem& M, const FqVec& f);

// Full automorphism: (x,y) -> ((ax+b)/(cx+d), e y/(cx+d)^{g+1}), e^2 = C.
struct LiftedAut {
  PGLElem M;
  FFElem e;
};

// Composition s1 after s2; the canonical-scaling factor lambda of the raw
// matrix product enters the y-multiplier as e1 e2 / lambda^{g+1}.
LiftedAut compose_aut(const LiftedAut& s1, const LiftedAut& s2, int genus);
LiftedAut invert_aut(const LiftedAut& s, int genus);

struct AutGroup {
  FieldPtr field;  // working field (splitting field, possibly doubled)
  int genus = 0;
  std::vector<LiftedAut> elems;          // sorted
  std::vector<std::vector<int>> table;   // table[i][j] = index of e_i e_j
  int id_index = -1;
  int j_index = -1;  // hyperelliptic involution (identity, -1)

  int index_of(const LiftedAut& s) const;  // -1 if absent
};

// Full group 1 -> <j> -> G -> Gbar -> 1; |G| = 2 |Gbar|. extra_degree
// enlarges the working field (the result must not depend on it).
AutGroup full_group(const OddCharCurve& c, unsigned extra_degree = 1);

}  // namespace modaut
