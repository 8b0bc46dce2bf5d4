#pragma once

#include "modaut/curves.hpp"
#include "modaut/multipoly.hpp"

namespace modaut {

// One method's evidence: a sorted list of candidate primes (divisors of N
// excluded) plus human-readable provenance notes.
struct CandidateSet {
  std::string method;  // "invariant" | "elementary-abelian" | "elimination" | "scan"
  std::vector<uint64_t> primes;
  std::vector<std::string> notes;
  bool partial = false;  // a resource budget was hit; the list may be short
};

struct ExceptionalEntry {
  uint64_t p = 0;
  std::string label;
  size_t order = 0;
};

struct ScanReport {
  int N = 0;
  uint64_t bound = 0;
  std::string generic_label;
  size_t generic_order = 0;
  std::vector<ExceptionalEntry> exceptional;  // ascending p (2 first when N odd)
  std::vector<uint64_t> flagged;  // p | disc, p not dividing N, no good model
  bool char2_included = false;    // N odd: the p = 2 fibre was computed
  size_t char2_order = 0;
  std::string char2_label;
  std::vector<std::string> notes;
};

// Exhaustive per-prime computation of |Aut| with group identification of the
// exceptional fibres. threads = 0 picks the hardware concurrency.
ScanReport full_scan(int N, uint64_t bound = 60000, unsigned threads = 0);

// Dihedral-invariant candidates (extra-involution levels only).
CandidateSet invariant_candidates(int N);

// Elementary-abelian (wild translation) candidates via the G1/G2 certificate.
CandidateSet ea_candidates(int N);

// Groebner elimination over Z on the Moebius coefficient system; r equations.
CandidateSet elimination_candidates(int N, int r = 6);

// Forced elimination on an arbitrary model y^2 = f (integer coefficients,
// even degree). Degenerate inputs with generic extra symmetries fall back to
// a per-prime count comparison up to modp_bound.
CandidateSet elimination_for_poly(const std::vector<Rational>& f, int r,
                                  uint64_t modp_bound = 200);

// Coefficients (of x^i, i = 1..count) of f(x) - f((ax+b)/(cx+d)) (cx+d)^deg f
// as polynomials in a,b,c,d = variable slots 0..3; homogeneous of degree
// deg f each.
std::vector<MPoly<RationalDom>> moebius_coeff_system(
    const std::vector<Rational>& f, int count);

// ascending primes <= bound
std::vector<uint64_t> primes_up_to(uint64_t bound);

// Quadratic-field analysis of the level-46 fibres: the two criterion values
// 4 u1 -/+ u5^3 together with the factored numerators of their norms
// (square roots of the norm numerators, i.e. the integer numerators of the
// values themselves over their Z[sqrt 2] denominators).
struct Criterion46 {
  QuadElem minus_value, plus_value;
  Factorization minus_numerator, plus_numerator;
};
Criterion46 criterion46();

// Resultant_a of the x- and x^7-coefficients of the pulled-back level-46
// dihedral model under x -> (ax+b)/(bx+a); the result is gamma * b^144 and
// gamma is returned.
Rational dihedral46_resultant();

}  // namespace modaut
