// End-to-end acceptance checks; prints one pass/fail line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "modaut/dihedral.hpp"
#include "modaut/report.hpp"

using namespace modaut;

namespace {

int failures = 0;

void line(int k, bool ok, const std::string& detail) {
  printf("criterion %d: %s — %s\n", k, ok ? "PASS" : "FAIL", detail.c_str());
  fflush(stdout);
  if (!ok) ++failures;
}

std::vector<QuadElem> qf(int N) {
  std::vector<QuadElem> f;
  for (auto& c : catalogue(N).f) f.emplace_back(c);
  return f;
}

Table1Result table1;

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  table1 = run_table1(60000, 0, default_expected_path());
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = table1.rows.size() == 19;
  for (auto& c : table1.checks) ok = ok && c.match;  // disputed cell included:
  // the computed p=23 row coincides with the reference table; the dispute is
  // with the reference's running text only
  bool disputed_seen = false, big_prime = false;
  for (auto& c : table1.checks)
    if (c.N == 30 && c.disputed && !c.note.empty()) disputed_seen = true;
  for (auto& r : table1.rows)
    if (r.N == 29)
      for (auto& e : r.exceptional) big_prime = big_prime || e.p == 51241;
  ok = ok && disputed_seen && big_prime && table1.all_nonflagged_match;
  std::ostringstream os;
  os << "full table reproduced at bound 60000 in " << (int)secs
     << "s; N=30 cell annotated; 51241 found";
  line(1, ok, os.str());
}

void criterion2() {
  struct Row {
    int N;
    std::array<long, 4> M;
    const char *u1, *u2;
  };
  std::vector<Row> rows{
      {22, {0, 4, 1, 0}, "-17322/14641", "130/121"},
      {26, {0, 1, 1, 0}, "-4351/2704", "15/13"},
      {28, {-1, 0, 0, 1}, "43625/784", "125/7"},
      {37, {0, 1, 1, 0}, "-25642/1369", "-198/37"},
      {50, {0, 1, 1, 0}, "-135/16", "-5"},
  };
  bool ok = true;
  for (auto& r : rows) {
    std::array<QuadElem, 4> M{QuadElem(Rational(r.M[0])), QuadElem(Rational(r.M[1])),
                              QuadElem(Rational(r.M[2])), QuadElem(Rational(r.M[3]))};
    auto u = dihedral_u(normalize_exact(qf(r.N), M));
    ok = ok && u[0] == QuadElem(Rational(r.u1)) && u[1] == QuadElem(Rational(r.u2));
  }
  line(2, ok, "genus-2 dihedral invariants exact for N = 22, 26, 28, 37, 50");
}

void criterion3() {
  Criterion46 c = criterion46();
  bool ok = c.minus_numerator.str() == "2^23*3^12*337^2*683^2" &&
            c.plus_numerator.str() == "2^10*3^12*7^2*13^2*281^2*709^2";
  Rational g = dihedral46_resultant();
  BigInt num = numerator(g);
  if (num < 0) num = -num;
  ok = ok && factor_int(num).str() == "3^12*7^2*23^10*60876058793276893^2" &&
       factor_int(denominator(g)).str() == "2^28";
  line(3, ok, "level-46 norm factorizations and resultant elimination exact");
}

void criterion4() {
  auto c = std::get<Char2Curve>(reduce_mod(37, 2));
  Char2Group G = full_group2(c);
  bool ok = G.raw_count == 480 && G.elems.size() == 160;
  // reduced group of order 80
  {
    int n = (int)G.table.size();
    std::set<int> reps;
    for (int i = 0; i < n; ++i) reps.insert(std::min(i, G.table[G.j_index][i]));
    ok = ok && reps.size() == 80;
  }
  auto [p2, n2] = sylow(G.table, 2);
  ok = ok && p2.size() == 32 && fingerprint(p2).center_order == 2 &&
       identify(p2) == "E32-";
  auto [p5, n5] = sylow(G.table, 5);
  ok = ok && p5.size() == 5 && n5 == 16;
  // the printed order-4 map with h = x^2 + x over F_4
  const ExtField* W = G.field.get();
  auto alphas = roots_in_field({1, 1, 1}, W);
  ok = ok && alphas.size() == 2;
  if (ok) {
    FFElem al = alphas[0], one = ff_one(W);
    int idx = G.index_of({al + one, al, al, al + one},
                         FqVec{ff_zero(W), one, one});
    ok = idx >= 0 && element_order(G.table, idx) == 4;
  }
  line(4, ok,
       "X_0(37) mod 2: 480 raw, |G|=160, |Gbar|=80, Sylow-2 = E32-, 16 "
       "Sylow-5s, h=x^2+x map has order 4");
}

void criterion5() {
  auto c = std::get<Char2Curve>(reduce_mod(33, 2));
  Char2Group G = full_group2(c);
  bool ok = G.elems.size() == 12 && identify(G.table) == "D6";
  std::set<std::array<uint64_t, 4>> mats;
  for (auto& s : G.elems) {
    std::array<uint64_t, 4> m{};
    for (int i = 0; i < 4; ++i) {
      if (!(s.M[i].is_zero() || s.M[i] == ff_one(G.field.get()))) ok = false;
      m[(size_t)i] = s.M[i].is_zero() ? 0 : 1;
    }
    mats.insert(m);
  }
  std::set<std::array<uint64_t, 4>> expect{{1, 0, 0, 1}, {0, 1, 1, 0},
                                           {0, 1, 1, 1}, {1, 1, 0, 1},
                                           {1, 1, 1, 0}, {1, 0, 1, 1}};
  ok = ok && mats == expect;
  // the unramified-infinity corollary: G = Gbar x <j>, i.e. D3 x Z/2 = D6
  ok = ok && infinity_unramified(c) && reduced_label(G.table, G.j_index) == "D3";
  // every other odd level: the 2-fibre matches the generic order exactly
  // (table1 rows come from criterion 1; standalone runs recompute them)
  if (table1.rows.empty()) table1 = run_table1(200, 0, default_expected_path());
  for (auto& r : table1.rows) {
    if (!r.char2_included || r.N == 33 || r.N == 37) continue;
    ok = ok && r.char2_order == r.generic_order;
  }
  line(5, ok,
       "X_0(33) mod 2: the six matrices, GL(2,2) x Z/2 (= D6), splitting "
       "cross-check; no other odd level grows at 2");
}

void criterion6() {
  auto cs = elimination_candidates(41);
  bool ok = cs.primes == std::vector<uint64_t>{2, 17, 41};
  auto c = std::get<OddCharCurve>(reduce_mod(41, 17));
  auto RG = reduced_group(c);
  AutGroup G = full_group(c);
  ok = ok && identify(G.table) == "(Z/2)^2" && RG.elems.size() == 2;
  // solution family b^4 = 2, c = -8b, d = -8b, a = -9b lives in F_{17^2};
  // every root gives the same projective map (9x-1)/(8x+8), and it must be
  // the group's one non-trivial element (the printed simplification
  // (9x-1)/(8x+9) drops a sign and is inconsistent with its own d = -8b)
  FieldPtr F2 = make_ext(17, 2);
  const ExtField* F = F2.get();
  int roots = 0;
  bool family_ok = true;
  FqVec f17;
  for (auto& e : c.f) f17.push_back(embed(e, F));
  for (auto& b : enumerate(F)) {
    if (b.is_zero() || ff_pow(b, BigInt(4)) != ff_const(F, 2)) continue;
    ++roots;
    FFElem m8 = -ff_const(F, 8), m9 = -ff_const(F, 9);
    PGLElem M(m9 * b, b, m8 * b, m8 * b);
    try {
      lift_constant(M, f17);  // throws unless M is a symmetry of f
    } catch (...) {
      family_ok = false;
    }
    bool in_group = false;
    for (auto& e : RG.elems) {
      PGLElem img(embed(e.M.a, F), embed(e.M.b, F), embed(e.M.c, F),
                  embed(e.M.d, F));
      in_group = in_group || img == M;
    }
    family_ok = family_ok && in_group;
  }
  ok = ok && roots == 4 && family_ok;
  line(6, ok,
       "N=41 elimination gives {2,17,41}; mod 17 the solution family b^4=2, "
       "c=d=-8b, a=-9b is the extra involution and A(41,17) = (Z/2)^2");
}

void criterion7() {
  auto grp = [](int N, uint64_t p) {
    return full_group(std::get<OddCharCurve>(reduce_mod(N, p)));
  };
  AutGroup g283 = grp(28, 3), g285 = grp(28, 5), g2811 = grp(28, 11),
           g487 = grp(48, 7);
  bool ok = g283.elems.size() == 48 && identify(g283.table) == "GL(2,3)";
  ok = ok && g285.elems.size() == 240 && satisfies_presentation(g285.table, pres_B());
  ok = ok && g2811.elems.size() == 24 && satisfies_presentation(g2811.table, pres_V(6));
  ok = ok && g487.elems.size() == 672 && satisfies_presentation(g487.table, pres_A());
  line(7, ok, "A(28,3)=GL(2,3), A(28,5)|=B, A(28,11)|=V6, A(48,7)|=A(672)");
}

void criterion8() {
  const char* suites[] = {"test_numbers",  "test_ffield",   "test_unipoly",
                          "test_moebius",  "test_multipoly", "test_curves",
                          "test_dihedral", "test_aut_odd",   "test_aut_char2",
                          "test_groups",   "test_sieve",     "test_report"};
  bool ok = true;
  std::string bad;
  for (const char* s : suites) {
    std::string cmd = std::string("./") + s + " >/dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) {
      ok = false;
      bad += std::string(" ") + s;
    }
  }
  line(8, ok,
       ok ? "all property/unit suites pass with zero failures"
          : "failing suites:" + bad);
}

void criterion9() {
  // levels carrying an extra exact involution: the invariant method applies
  bool ok = true;
  std::string detail;
  if (table1.rows.empty()) table1 = run_table1(200, 0, default_expected_path());
  for (int N : {22, 26, 28, 30, 33, 35, 37, 39, 40, 46, 48, 50}) {
    auto cand = invariant_candidates(N);
    for (auto& r : table1.rows) {
      if (r.N != N) continue;
      for (auto& e : r.exceptional) {
        if (e.p == 2) continue;
        if (std::find(cand.primes.begin(), cand.primes.end(), e.p) ==
            cand.primes.end()) {
          ok = false;
          detail += " N=" + std::to_string(N) + ",p=" + std::to_string(e.p);
        }
      }
    }
  }
  // 181 is a candidate for N=39 but is confirmed non-exceptional
  auto c39 = invariant_candidates(39);
  bool has181 = std::find(c39.primes.begin(), c39.primes.end(), 181) !=
                c39.primes.end();
  bool exc181 = false;
  for (auto& r : table1.rows)
    if (r.N == 39)
      for (auto& e : r.exceptional) exc181 = exc181 || e.p == 181;
  ok = ok && has181 && !exc181;
  line(9, ok,
       ok ? "scan-found exceptional primes contained in every applicable "
            "candidate set; 181 non-exceptional for N=39"
          : "uncovered exceptional primes:" + detail);
}

}  // namespace

int main(int argc, char** argv) {
  void (*crit[])() = {criterion1, criterion2, criterion3, criterion4,
                      criterion5, criterion6, criterion7, criterion8,
                      criterion9};
  auto guarded = [&](int k) {
    try {
      crit[k - 1]();
    } catch (const std::exception& e) {
      line(k, false, std::string("exception: ") + e.what());
    }
  };
  if (argc > 1) {
    // debugging aid: run only the listed criteria (1-9)
    for (int i = 1; i < argc; ++i) {
      int k = atoi(argv[i]);
      if (k >= 1 && k <= 9) guarded(k);
    }
  } else {
    for (int k = 1; k <= 9; ++k) guarded(k);
  }
  printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria pass"
                               : "ACCEPTANCE: failures present");
  return failures == 0 ? 0 : 1;
}
