#pragma once

#include "modaut/curves.hpp"

namespace modaut {

// Matrix of a characteristic-2 automorphism, kept in the exact scaling for
// which q((ax+b)/(cx+d))(cx+d)^{g+1} = q(x) holds on the nose (no projective
// renormalization; the scaling is only defined up to mu_{g+1}).
using Mat2 = std::array<FFElem, 4>;  // a, b, c, d

bool mat2_less(const Mat2& x, const Mat2& y);

// sum_i f_i (ax+b)^i (cx+d)^{w-i}: the weight-w pullback of f (deg f <= w)
FqVec pull_weighted(const FqVec& f, const Mat2& m, int w);

struct QSymmetries {
  FieldPtr field;          // common representation field of all entries
  std::vector<Mat2> mats;  // sorted by mat2_less, deduplicated
  bool truncated = false;  // the solver hit its extension cap; the list is
                           // complete only relative to K
};

// All matrices with entries in F_{2^K} satisfying the q-condition exactly.
// q lives over F_2; K is capped (domain error beyond the cap). The
// representation field may be a proper extension of F_{2^K} when the
// coefficient system is solved through the multivariate machinery, but every
// entry is fixed by the K-th power of Frobenius.
QSymmetries q_symmetries(const FqVec& q, int genus, unsigned K);

// Brute-force oracle: every invertible matrix over F_{2^K}, K <= 4.
QSymmetries q_symmetries_exhaustive(const FqVec& q, int genus, unsigned K);

// F_2-linear operator h -> h^2 + q h on polynomials of degree <= g+1 over
// F_{2^k}, with the elimination of its coefficient matrix precomputed so
// that many right-hand sides can be solved cheaply.
struct ASOperator {
  const ExtField* field = nullptr;  // non-owning: the field of q
  FqVec q;
  int genus = 0;
  std::vector<std::vector<uint8_t>> matrix;  // (2g+3)k rows, (g+2)k columns

  // All h of degree <= g+1 with h^2 + q h = rhs (deg rhs <= 2g+2); the
  // result has size 0 or 2, and the two solutions differ by q.
  std::vector<FqVec> solve(const FqVec& rhs) const;

  // elimination data
  std::vector<std::vector<uint8_t>> trans_;  // row transform, rows x rows
  std::vector<int> pivot_col_;               // per reduced row, -1 when zero
};

ASOperator make_as_operator(const FqVec& q, int genus);

struct Char2Aut {
  Mat2 M;   // lambda = 1 scaling, canonical within its scalar orbit
  FqVec h;  // deg <= g+1
};

// (s1 after s2); the raw matrix product keeps lambda = 1, and
// h = h2 + (pullback of h1 under M2 with weight g+1).
Char2Aut compose_aut2(const Char2Aut& s1, const Char2Aut& s2, int genus);

struct Char2Group {
  FieldPtr field;
  int genus = 0;
  FqVec q, p;                    // model embedded into `field`
  std::vector<FFElem> scalars;   // mu_{g+1} inside F_{2^K}
  std::vector<Char2Aut> elems;   // sorted
  std::vector<std::vector<int>> table;
  int id_index = -1;
  int j_index = -1;        // hyperelliptic involution (identity, q)
  size_t raw_count = 0;    // solutions before the scalar identification
  bool truncated = false;  // completeness is relative to K

  Char2Aut canonical(const Mat2& m, FqVec h) const;
  int index_of(const Mat2& m, const FqVec& h) const;  // canonicalizes; -1
};

// Full automorphism group of y^2 + q y = p over F_{2^K} (default K = 8).
Char2Group full_group2(const Char2Curve& c, unsigned K = 8);

// Two places above infinity iff deg q = g+1; when additionally the 2-Sylow
// of the reduced group fixes only infinity, G splits as Gbar x <j>.
inline bool infinity_unramified(const Char2Curve& c) {
  return fq::deg(c.q) == c.genus + 1;
}

}  // namespace modaut
