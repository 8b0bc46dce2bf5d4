#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace modaut {

// Cayley table: table[i][j] = index of (element i) * (element j).
using CayleyTable = std::vector<std::vector<int>>;

// Throws domain_error unless the table is a group (closure, identity,
// inverses, associativity via Light's test on a generating set).
void check_group(const CayleyTable& t);

int table_identity(const CayleyTable& t);
std::vector<int> table_inverses(const CayleyTable& t);
int element_order(const CayleyTable& t, int x);

// Closure of a generating set inside the ambient table (sorted indices).
std::vector<int> closure(const CayleyTable& t, std::vector<int> gens);

// Isomorphism invariants, all computed exactly from the table.
struct GroupFingerprint {
  size_t order = 0;
  std::map<int, size_t> order_count;  // element order -> multiplicity
  size_t center_order = 0;
  size_t derived_order = 0;
  std::vector<int> ab_invariants;  // invariant factors of G/G', ascending
  size_t square_roots_of_1 = 0;    // #{x : x^2 = 1}, identity included

  bool operator==(const GroupFingerprint&) const = default;
  std::string str() const;
};

GroupFingerprint fingerprint(const CayleyTable& t);

// Words over the free group: letters 1..ngens, negative for inverses.
struct PresentationSpec {
  int ngens = 0;
  std::vector<std::vector<int>> relators;
  size_t expected_order = 0;
};

PresentationSpec pres_A();       // order 672
PresentationSpec pres_B();       // order 240
PresentationSpec pres_V(int n);  // order 4n
PresentationSpec pres_U6();      // order 24

// True iff some tuple of elements satisfies every relator and generates the
// whole group; requires |table| == expected order. The search assigns
// generators in order and prunes with each relator as soon as all of its
// letters are bound (power relators restrict candidate element orders).
bool satisfies_presentation(const CayleyTable& t, const PresentationSpec& p);

// A Sylow-l subgroup as a re-indexed sub-table plus the conjugate count.
std::pair<CayleyTable, size_t> sylow(const CayleyTable& t, int ell);

// Decision cascade against the named catalogue; labels:
//   "1", "Z/n", "(Z/2)^k", products like "Z/2 x Z/4" (abelian),
//   "Dn" (order 2n), "Vn", "U6", "A(672)", "B(240)", "GL(2,3)", "S4",
//   "Z/2 x S4", "Z/2 x D4", "E32+", "E32-", "E32- : Z/5",
//   "unrecognized(<fingerprint>)".
// Note GL(2,2) x Z/2 is isomorphic to D6 and reported as "D6".
std::string identify(const CayleyTable& t);

}  // namespace modaut
