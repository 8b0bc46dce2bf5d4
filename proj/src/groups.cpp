#include "modaut/groups.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace modaut {

namespace {

size_t order_of(const CayleyTable& t) { return t.size(); }

// greedy generating set, used by Light's associativity test
std::vector<int> generating_set(const CayleyTable& t) {
  int n = (int)t.size();
  std::vector<char> in(n, 0);
  std::vector<int> gens;
  std::vector<int> cl;
  auto grow = [&](int g) {
    gens.push_back(g);
    std::vector<int> frontier{g};
    in[(size_t)g] = 1;
    cl.push_back(g);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int y : cl) {
          for (int z : {t[(size_t)x][(size_t)y], t[(size_t)y][(size_t)x]}) {
            if (!in[(size_t)z]) {
              in[(size_t)z] = 1;
              next.push_back(z);
            }
          }
        }
      for (int x : next) cl.push_back(x);
      frontier = std::move(next);
    }
  };
  for (int g = 0; g < n; ++g)
    if (!in[(size_t)g]) grow(g);
  return gens;
}

}  // namespace

void check_group(const CayleyTable& t) {
  int n = (int)t.size();
  if (n == 0) throw std::domain_error("check_group: empty table");
  for (auto& row : t) {
    if ((int)row.size() != n) throw std::domain_error("check_group: ragged");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[(size_t)v])
        throw std::domain_error("check_group: not a Latin square");
      seen[(size_t)v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      int v = t[(size_t)i][(size_t)j];
      if (seen[(size_t)v])
        throw std::domain_error("check_group: not a Latin square");
      seen[(size_t)v] = 1;
    }
  }
  int e = table_identity(t);
  if (e < 0) throw std::domain_error("check_group: no identity");
  for (int i = 0; i < n; ++i) {
    bool inv = false;
    for (int j = 0; j < n && !inv; ++j)
      inv = t[(size_t)i][(size_t)j] == e && t[(size_t)j][(size_t)i] == e;
    if (!inv) throw std::domain_error("check_group: missing inverse");
  }
  // Light's test: associativity for all (a, g, b) with g in a generating set
  // implies full associativity in a Latin square with identity.
  for (int g : generating_set(t))
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (t[(size_t)t[(size_t)a][(size_t)g]][(size_t)b] !=
            t[(size_t)a][(size_t)t[(size_t)g][(size_t)b]])
          throw std::domain_error("check_group: not associative");
}

int table_identity(const CayleyTable& t) {
  int n = (int)t.size();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = t[(size_t)e][(size_t)i] == i && t[(size_t)i][(size_t)e] == i;
    if (ok) return e;
  }
  return -1;
}

std::vector<int> table_inverses(const CayleyTable& t) {
  int n = (int)t.size();
  int e = table_identity(t);
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t[(size_t)i][(size_t)j] == e) {
        inv[(size_t)i] = j;
        break;
      }
  return inv;
}

int element_order(const CayleyTable& t, int x) {
  int e = table_identity(t);
  int cur = x, ord = 1;
  while (cur != e) {
    cur = t[(size_t)cur][(size_t)x];
    ++ord;
  }
  return ord;
}

std::vector<int> closure(const CayleyTable& t, std::vector<int> gens) {
  int n = (int)t.size();
  std::vector<char> in(n, 0);
  int e = table_identity(t);
  std::vector<int> cl{e};
  in[(size_t)e] = 1;
  std::vector<int> frontier;
  for (int g : gens)
    if (!in[(size_t)g]) {
      in[(size_t)g] = 1;
      cl.push_back(g);
      frontier.push_back(g);
    }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (size_t i = 0; i < cl.size(); ++i) {
        int y = cl[i];
        for (int z : {t[(size_t)x][(size_t)y], t[(size_t)y][(size_t)x]}) {
          if (!in[(size_t)z]) {
            in[(size_t)z] = 1;
            cl.push_back(z);
            next.push_back(z);
          }
        }
      }
    frontier = std::move(next);
  }
  std::sort(cl.begin(), cl.end());
  return cl;
}

namespace {

std::vector<int> all_orders(const CayleyTable& t) {
  std::vector<int> ords(t.size());
  for (size_t i = 0; i < t.size(); ++i) ords[i] = element_order(t, (int)i);
  return ords;
}

CayleyTable subtable(const CayleyTable& t, const std::vector<int>& sub) {
  std::vector<int> pos(t.size(), -1);
  for (size_t i = 0; i < sub.size(); ++i) pos[(size_t)sub[i]] = (int)i;
  CayleyTable s(sub.size(), std::vector<int>(sub.size()));
  for (size_t i = 0; i < sub.size(); ++i)
    for (size_t j = 0; j < sub.size(); ++j) {
      int v = pos[(size_t)t[(size_t)sub[i]][(size_t)sub[j]]];
      if (v < 0) throw std::domain_error("subtable: set not closed");
      s[i][j] = v;
    }
  return s;
}

std::vector<int> derived_subgroup(const CayleyTable& t) {
  int n = (int)t.size();
  auto inv = table_inverses(t);
  std::set<int> comms;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int w = t[(size_t)t[(size_t)x][(size_t)y]]
               [(size_t)t[(size_t)inv[(size_t)x]][(size_t)inv[(size_t)y]]];
      comms.insert(w);
    }
  return closure(t, std::vector<int>(comms.begin(), comms.end()));
}

// quotient by a normal subgroup, given as a sorted element list
CayleyTable quotient(const CayleyTable& t, const std::vector<int>& nsub) {
  int n = (int)t.size();
  std::vector<int> coset(n, -1);  // element -> coset id
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (coset[(size_t)i] >= 0) continue;
    int id = (int)reps.size();
    reps.push_back(i);
    for (int h : nsub) coset[(size_t)t[(size_t)i][(size_t)h]] = id;
    if (coset[(size_t)i] != id)
      throw std::domain_error("quotient: subgroup not normal");
  }
  CayleyTable q(reps.size(), std::vector<int>(reps.size()));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j)
      q[i][j] = coset[(size_t)t[(size_t)reps[i]][(size_t)reps[j]]];
  return q;
}

// invariant factors of an abelian group, ascending divisibility chain
std::vector<int> abelian_invariants(const CayleyTable& t) {
  size_t m = t.size();
  if (m == 1) return {};
  auto ords = all_orders(t);
  // per prime: partition lambda (descending) from counts of p^i-torsion
  std::map<int, std::vector<int>> parts;
  size_t rest = m;
  for (int p = 2; (size_t)p * (size_t)p <= m || rest > 1; ++p) {
    if (rest % (size_t)p) continue;
    std::vector<int> mu{0};  // mu[i] = log_p #{x : x^{p^i} = 1}
    for (int i = 1;; ++i) {
      long long pi = 1;
      for (int j = 0; j < i; ++j) pi *= p;
      size_t cnt = 0;
      for (int o : ords)
        if (pi % o == 0) ++cnt;
      int lg = 0;
      size_t c = cnt;
      while (c > 1) {
        c /= (size_t)p;
        ++lg;
      }
      mu.push_back(lg);
      if (mu[(size_t)i] == mu[(size_t)i - 1]) {
        mu.pop_back();
        break;
      }
    }
    int r = mu.size() > 1 ? mu[1] : 0;  // number of cyclic p-factors
    std::vector<int> lambda;
    for (int j = 1; j <= r; ++j) {
      int lj = 0;
      for (size_t i = 1; i < mu.size(); ++i)
        if (mu[i] - mu[i - 1] >= j) ++lj;
      lambda.push_back(lj);  // descending automatically
    }
    parts[p] = lambda;
    while (rest % (size_t)p == 0) rest /= (size_t)p;
  }
  size_t width = 0;
  for (auto& [p, lam] : parts) width = std::max(width, lam.size());
  std::vector<int> factors;  // descending
  for (size_t k = 0; k < width; ++k) {
    long long d = 1;
    for (auto& [p, lam] : parts)
      if (k < lam.size())
        for (int j = 0; j < lam[k]; ++j) d *= p;
    factors.push_back((int)d);
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

bool is_abelian(const CayleyTable& t) {
  int n = (int)t.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t[(size_t)i][(size_t)j] != t[(size_t)j][(size_t)i]) return false;
  return true;
}

std::vector<int> center_of(const CayleyTable& t) {
  int n = (int)t.size();
  std::vector<int> z;
  for (int i = 0; i < n; ++i) {
    bool c = true;
    for (int j = 0; j < n && c; ++j)
      c = t[(size_t)i][(size_t)j] == t[(size_t)j][(size_t)i];
    if (c) z.push_back(i);
  }
  return z;
}

}  // namespace

std::string GroupFingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << "; orders=";
  bool first = true;
  for (auto& [o, c] : order_count) {
    os << (first ? "" : ",") << o << ":" << c;
    first = false;
  }
  os << "; center=" << center_order << "; derived=" << derived_order
     << "; ab=[";
  for (size_t i = 0; i < ab_invariants.size(); ++i)
    os << (i ? "," : "") << ab_invariants[i];
  os << "]; sq1=" << square_roots_of_1;
  return os.str();
}

GroupFingerprint fingerprint(const CayleyTable& t) {
  check_group(t);
  GroupFingerprint f;
  f.order = t.size();
  for (int o : all_orders(t)) {
    ++f.order_count[o];
    if (o <= 2) ++f.square_roots_of_1;
  }
  f.center_order = center_of(t).size();
  auto d = derived_subgroup(t);
  f.derived_order = d.size();
  f.ab_invariants = abelian_invariants(quotient(t, d));
  return f;
}

PresentationSpec pres_A() {
  return {3,
          {{3, 3},
           {2, -1, -1, -2, -1},
           {-2, 1, 1, 1, 2, -1},
           {2, -1, 3, -2, -1, 3, -1, 3},
           {-1, -2, 3, -2, -1, -2, 3, -2}},
          672};
}

PresentationSpec pres_B() {
  return {3,
          {{3, 3},
           {-1, -1, -1, -1, -1},
           {-2, -1, -1, 2, 1},
           {3, -2, 3, -2, 3, -2},
           {-1, 2, 3, 1, 1, 3, 1, 3}},
          240};
}

PresentationSpec pres_V(int n) {
  std::vector<int> yn((size_t)n, 2);
  return {2, {{1, 1, 1, 1}, yn, {1, 2, 1, 2}, {-1, 2, -1, 2}}, 4 * (size_t)n};
}

PresentationSpec pres_U6() {
  std::vector<int> y12(12, 2);
  return {2, {{1, 1}, y12, {1, 2, 1, 2, 2, 2, 2, 2, 2, 2}}, 24};
}

namespace {

int eval_word(const CayleyTable& t, const std::vector<int>& inv,
              const std::vector<int>& word, const std::vector<int>& assign,
              int e) {
  int cur = e;
  for (int letter : word) {
    int g = assign[(size_t)(std::abs(letter) - 1)];
    if (letter < 0) g = inv[(size_t)g];
    cur = t[(size_t)cur][(size_t)g];
  }
  return cur;
}

}  // namespace

bool satisfies_presentation(const CayleyTable& t, const PresentationSpec& p) {
  if (t.size() != p.expected_order) return false;
  int n = (int)t.size();
  int e = table_identity(t);
  auto inv = table_inverses(t);
  auto ords = all_orders(t);

  // order bound per generator from single-letter power relators
  std::vector<long long> bound((size_t)p.ngens, 0);
  for (auto& w : p.relators) {
    if (w.empty()) continue;
    bool power = true;
    for (int l : w) power = power && std::abs(l) == std::abs(w[0]);
    if (power)
      bound[(size_t)(std::abs(w[0]) - 1)] =
          std::gcd(bound[(size_t)(std::abs(w[0]) - 1)], (long long)w.size());
  }
  std::vector<std::vector<int>> cands((size_t)p.ngens);
  for (int g = 0; g < p.ngens; ++g)
    for (int x = 0; x < n; ++x)
      if (!bound[(size_t)g] || bound[(size_t)g] % ords[(size_t)x] == 0)
        cands[(size_t)g].push_back(x);

  // relator checked at the first position where all its letters are bound
  std::vector<std::vector<const std::vector<int>*>> at((size_t)p.ngens);
  for (auto& w : p.relators) {
    int last = 0;
    for (int l : w) last = std::max(last, std::abs(l));
    if (last > 0) at[(size_t)(last - 1)].push_back(&w);
  }

  std::vector<int> assign((size_t)p.ngens, -1);
  auto rec = [&](auto&& self, int g) -> bool {
    if (g == p.ngens) {
      std::vector<int> gens(assign.begin(), assign.end());
      return closure(t, gens).size() == t.size();
    }
    for (int x : cands[(size_t)g]) {
      assign[(size_t)g] = x;
      bool ok = true;
      for (auto* w : at[(size_t)g])
        if (eval_word(t, inv, *w, assign, e) != e) {
          ok = false;
          break;
        }
      if (ok && self(self, g + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

std::pair<CayleyTable, size_t> sylow(const CayleyTable& t, int ell) {
  check_group(t);
  size_t n = t.size();
  for (int d = 2; ell >= 2 && d * d <= ell; ++d)
    if (ell % d == 0) throw std::domain_error("sylow: ell not prime");
  if (ell < 2 || n % (size_t)ell)
    throw std::domain_error("sylow: prime does not divide the order");
  size_t pa = 1;
  for (size_t m = n; m % (size_t)ell == 0; m /= (size_t)ell) pa *= (size_t)ell;
  int e = table_identity(t);
  auto inv = table_inverses(t);
  auto ords = all_orders(t);

  std::vector<int> H{e};
  while (H.size() < pa) {
    std::vector<char> inH(n, 0);
    for (int h : H) inH[(size_t)h] = 1;
    // normalizer of H
    std::vector<int> N;
    for (int g = 0; g < (int)n; ++g) {
      bool norm = true;
      for (int h : H) {
        int c = t[(size_t)t[(size_t)g][(size_t)h]][(size_t)inv[(size_t)g]];
        if (!inH[(size_t)c]) {
          norm = false;
          break;
        }
      }
      if (norm) N.push_back(g);
    }
    // an element of N \ H whose coset in N/H has order a power of ell
    int pick = -1;
    for (int y : N) {
      if (inH[(size_t)y]) continue;
      int m = 1, cur = y;  // coset order: least m with y^m in H
      while (!inH[(size_t)cur]) {
        cur = t[(size_t)cur][(size_t)y];
        ++m;
      }
      int tpart = m;
      while (tpart % ell == 0) tpart /= ell;
      if (tpart == m) continue;  // no ell in the coset order
      int x = e;
      for (int i = 0; i < tpart; ++i) x = t[(size_t)x][(size_t)y];
      if (!inH[(size_t)x]) {
        pick = x;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("sylow: growth step failed");
    auto grown = H;
    grown.push_back(pick);
    H = closure(t, grown);
  }
  std::sort(H.begin(), H.end());
  // count conjugates
  std::set<std::vector<int>> conj;
  for (int g = 0; g < (int)n; ++g) {
    std::vector<int> img;
    img.reserve(H.size());
    for (int h : H)
      img.push_back(t[(size_t)t[(size_t)g][(size_t)h]][(size_t)inv[(size_t)g]]);
    std::sort(img.begin(), img.end());
    conj.insert(std::move(img));
  }
  (void)ords;
  return {subtable(t, H), conj.size()};
}

namespace {

std::string abelian_label(const std::vector<int>& inv) {
  if (inv.empty()) return "1";
  if (inv.size() == 1) return "Z/" + std::to_string(inv[0]);
  bool elem2 = true;
  for (int d : inv) elem2 = elem2 && d == 2;
  if (elem2) return "(Z/2)^" + std::to_string(inv.size());
  std::string s;
  for (size_t i = 0; i < inv.size(); ++i)
    s += (i ? " x " : "") + ("Z/" + std::to_string(inv[i]));
  return s;
}

bool is_dihedral(const CayleyTable& t, const std::vector<int>& ords) {
  size_t n2 = t.size();
  if (n2 % 2 || n2 < 6) return false;
  int n = (int)(n2 / 2);
  auto inv = table_inverses(t);
  for (int r = 0; r < (int)n2; ++r) {
    if (ords[(size_t)r] != n) continue;
    std::vector<char> inC(n2, 0);
    int cur = r;
    for (int i = 0; i < n; ++i) {
      inC[(size_t)cur] = 1;
      cur = t[(size_t)cur][(size_t)r];
    }
    for (int s = 0; s < (int)n2; ++s) {
      if (inC[(size_t)s] || ords[(size_t)s] != 2) continue;
      int c = t[(size_t)t[(size_t)s][(size_t)r]][(size_t)s];
      if (c == inv[(size_t)r]) return true;
    }
    return false;  // any order-n element generates the same candidate core
  }
  return false;
}

// reference tables built from explicit constructions (no stored constants)
CayleyTable s4_table() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto idx = [&](const std::array<int, 4>& q) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return (int)i;
    return -1;
  };
  CayleyTable t(24, std::vector<int>(24));
  for (size_t i = 0; i < 24; ++i)
    for (size_t j = 0; j < 24; ++j) {
      std::array<int, 4> c;
      for (int k = 0; k < 4; ++k) c[(size_t)k] = perms[i][(size_t)perms[j][(size_t)k]];
      t[i][j] = idx(c);
    }
  return t;
}

CayleyTable gl23_table() {
  std::vector<std::array<int, 4>> mats;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          if ((a * d - b * c) % 3 != 0) mats.push_back({a, b, c, d});
  auto idx = [&](std::array<int, 4> m) {
    for (auto& v : m) v = ((v % 3) + 3) % 3;
    for (size_t i = 0; i < mats.size(); ++i)
      if (mats[i] == m) return (int)i;
    return -1;
  };
  CayleyTable t(mats.size(), std::vector<int>(mats.size()));
  for (size_t i = 0; i < mats.size(); ++i)
    for (size_t j = 0; j < mats.size(); ++j) {
      auto& x = mats[i];
      auto& y = mats[j];
      t[i][j] = idx({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                     x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]});
    }
  return t;
}

const GroupFingerprint& s4_fingerprint() {
  static GroupFingerprint f = fingerprint(s4_table());
  return f;
}

const GroupFingerprint& gl23_fingerprint() {
  static GroupFingerprint f = fingerprint(gl23_table());
  return f;
}

// G = H x <z> with z a central involution and H of index 2, if possible;
// returns the labels of all such H.
std::vector<std::string> split_off_z2(const CayleyTable& t) {
  size_t n = t.size();
  int e = table_identity(t);
  auto ords = all_orders(t);
  std::vector<int> zs;
  for (int z : center_of(t))
    if (ords[(size_t)z] == 2) zs.push_back(z);
  if (zs.empty()) return {};
  // M = <squares, commutators>; index-2 subgroups are preimages of
  // hyperplanes of the elementary abelian quotient G/M
  auto inv = table_inverses(t);
  std::set<int> gens;
  for (int x = 0; x < (int)n; ++x) {
    gens.insert(t[(size_t)x][(size_t)x]);
    for (int y = 0; y < (int)n; ++y)
      gens.insert(t[(size_t)t[(size_t)x][(size_t)y]]
                   [(size_t)t[(size_t)inv[(size_t)x]][(size_t)inv[(size_t)y]]]);
  }
  auto M = closure(t, std::vector<int>(gens.begin(), gens.end()));
  if (M.size() == n) return {};
  // coset ids and F2 coordinates relative to a greedy basis of G/M
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < (int)n; ++i) {
    if (coset[(size_t)i] >= 0) continue;
    int id = (int)reps.size();
    reps.push_back(i);
    for (int h : M) coset[(size_t)t[(size_t)i][(size_t)h]] = id;
  }
  size_t r = 0;
  while ((1u << r) < reps.size()) ++r;
  std::vector<int> basis;
  std::vector<unsigned> vec(reps.size(), 0);  // coset id -> F2 coordinates
  std::vector<char> reached(reps.size(), 0);
  reached[(size_t)coset[(size_t)e]] = 1;
  for (int i = 0; i < (int)n && basis.size() < r; ++i) {
    int ci = coset[(size_t)i];
    if (reached[(size_t)ci]) continue;
    unsigned bit = 1u << basis.size();
    basis.push_back(i);
    std::vector<size_t> old;
    for (size_t cj = 0; cj < reps.size(); ++cj)
      if (reached[cj]) old.push_back(cj);
    for (size_t cj : old) {
      int sum = coset[(size_t)t[(size_t)reps[cj]][(size_t)i]];
      reached[(size_t)sum] = 1;
      vec[(size_t)sum] = vec[cj] | bit;
    }
  }
  std::vector<std::string> labels;
  for (unsigned chi = 1; chi < (1u << r); ++chi) {
    bool zout = false;
    for (int z : zs) zout = zout || __builtin_popcount(chi & vec[(size_t)coset[(size_t)z]]) % 2;
    if (!zout) continue;
    std::vector<int> H;
    for (int i = 0; i < (int)n; ++i)
      if (__builtin_popcount(chi & vec[(size_t)coset[(size_t)i]]) % 2 == 0)
        H.push_back(i);
    labels.push_back(identify(subtable(t, H)));
  }
  return labels;
}

bool is_extraspecial2(const CayleyTable& t, const std::vector<int>& ords) {
  auto z = center_of(t);
  if (z.size() != 2) return false;
  auto q = quotient(t, z);
  for (int x = 0; x < (int)q.size(); ++x)
    if (element_order(q, x) > 2) return false;
  (void)ords;
  return true;
}

}  // namespace

std::string identify(const CayleyTable& t) {
  check_group(t);
  size_t n = t.size();
  auto ords = all_orders(t);

  if (is_abelian(t)) return abelian_label(abelian_invariants(t));
  if (is_dihedral(t, ords)) return "D" + std::to_string(n / 2);
  if (n == 672 && satisfies_presentation(t, pres_A())) return "A(672)";
  if (n == 240 && satisfies_presentation(t, pres_B())) return "B(240)";
  if (n % 4 == 0 && n >= 12 && satisfies_presentation(t, pres_V((int)(n / 4))))
    return "V" + std::to_string(n / 4);
  if (n == 24 && satisfies_presentation(t, pres_U6())) return "U6";
  if (n == 48 && fingerprint(t) == gl23_fingerprint()) return "GL(2,3)";
  if (n == 24 && fingerprint(t) == s4_fingerprint()) return "S4";
  for (auto& h : split_off_z2(t)) {
    if (h == "S4") return "Z/2 x S4";
    if (h == "D4") return "Z/2 x D4";
  }
  if (n == 32 && is_extraspecial2(t, ords)) {
    size_t invol = 0;
    for (int o : ords)
      if (o == 2) ++invol;
    return invol == 11 ? "E32-" : "E32+";
  }
  if (n == 160) {
    auto [p2, cnt] = sylow(t, 2);
    (void)cnt;
    if (identify(p2) == "E32-") return "E32- : Z/5";
  }
  return "unrecognized(" + fingerprint(t).str() + ")";
}

}  // namespace modaut
