#include "modaut/ffield.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>

#include "modaut/fqpoly.hpp"

namespace modaut {

namespace {

struct XorShift {
  uint64_t s;
  explicit XorShift(uint64_t seed) : s(seed ? seed : 0x9E3779B97F4A7C15ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

}  // namespace

namespace fp {

void trim(FpVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const FpVec& a) { return (int)a.size() - 1; }

FpVec add(const Zp& z, const FpVec& a, const FpVec& b) {
  FpVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = z.add(x, y);
  }
  trim(r);
  return r;
}

FpVec sub(const Zp& z, const FpVec& a, const FpVec& b) {
  FpVec r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = z.sub(x, y);
  }
  trim(r);
  return r;
}

FpVec mul(const Zp& z, const FpVec& a, const FpVec& b) {
  if (a.empty() || b.empty()) return {};
  FpVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = z.add(r[i + j], z.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

FpVec scal(const Zp& z, const FpVec& a, uint64_t c) {
  FpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = z.mul(a[i], c);
  trim(r);
  return r;
}

void divrem(const Zp& z, const FpVec& a, const FpVec& b, FpVec& q, FpVec& r) {
  if (b.empty()) throw std::domain_error("fp::divrem: division by zero");
  r = a;
  trim(r);
  q.clear();
  int db = deg(b);
  if (deg(r) < db) return;
  q.assign(deg(r) - db + 1, 0);
  uint64_t linv = z.inv(b.back());
  for (int i = deg(r); i >= db; --i) {
    if (r[i] == 0) continue;
    uint64_t f = z.mul(r[i], linv);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = z.sub(r[i - db + j], z.mul(f, b[j]));
  }
  trim(r);
  trim(q);
}

FpVec rem(const Zp& z, const FpVec& a, const FpVec& b) {
  FpVec q, r;
  divrem(z, a, b, q, r);
  return r;
}

FpVec monic(const Zp& z, FpVec a) {
  trim(a);
  if (a.empty() || a.back() == 1) return a;
  return scal(z, a, z.inv(a.back()));
}

FpVec gcd(const Zp& z, FpVec a, FpVec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpVec r = rem(z, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(z, std::move(a));
}

FpVec deriv(const Zp& z, const FpVec& a) {
  if (a.size() <= 1) return {};
  FpVec r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = z.mul(a[i], i % z.p);
  trim(r);
  return r;
}

uint64_t eval(const Zp& z, const FpVec& a, uint64_t x) {
  uint64_t v = 0;
  for (size_t i = a.size(); i-- > 0;) v = z.add(z.mul(v, x), a[i]);
  return v;
}

FpVec powmod(const Zp& z, FpVec base, const BigInt& e, const FpVec& mod) {
  FpVec r{1};
  base = rem(z, base, mod);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = rem(z, mul(z, r, r), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(z, mul(z, r, base), mod);
  }
  return r;
}

// rows[j] = t^(p*j) mod m for j < k, valid in the ring F_p[t]/(m)
std::vector<FpVec> frob_matrix(const Zp& z, const FpVec& m) {
  unsigned k = deg(m);
  FpVec xp = powmod(z, FpVec{0, 1}, BigInt((unsigned long)z.p), m);
  std::vector<FpVec> rows(k);
  rows[0] = FpVec{1};
  for (unsigned j = 1; j < k; ++j) rows[j] = rem(z, mul(z, rows[j - 1], xp), m);
  for (auto& r : rows) r.resize(k, 0);
  return rows;
}

FpVec apply_rows(const Zp& z, const std::vector<FpVec>& rows, const FpVec& v) {
  unsigned k = rows.size();
  FpVec out(k, 0);
  for (unsigned j = 0; j < k && j < v.size(); ++j) {
    if (!v[j]) continue;
    for (unsigned i = 0; i < k; ++i)
      out[i] = z.add(out[i], z.mul(v[j], rows[j][i]));
  }
  return out;  // not trimmed (fixed length k)
}

bool is_irreducible(const Zp& z, const FpVec& m) {
  int k = deg(m);
  if (k <= 0) return false;
  if (k == 1) return true;
  if (m[0] == 0) return false;  // root at 0
  FpVec xp = powmod(z, FpVec{0, 1}, BigInt((unsigned long)z.p), m);
  {
    FpVec g = gcd(z, sub(z, xp, FpVec{0, 1}), m);
    if (deg(g) > 0) return false;  // linear factor
  }
  auto rows = frob_matrix(z, m);
  // checkpoints: k/r for prime r | k, plus k itself
  std::vector<int> checks;
  int kk = k;
  for (int r = 2; r * r <= kk; ++r)
    if (kk % r == 0) {
      checks.push_back(k / r);
      while (kk % r == 0) kk /= r;
    }
  if (kk > 1 && kk < k) checks.push_back(k / kk);
  std::sort(checks.begin(), checks.end());
  FpVec v(k, 0);
  v[1] = 1;  // t
  int step = 0;
  for (int chk : checks) {
    while (step < chk) {
      v = apply_rows(z, rows, v);
      ++step;
    }
    FpVec vv = v;
    trim(vv);
    FpVec g = gcd(z, sub(z, vv, FpVec{0, 1}), m);
    if (deg(g) > 0) return false;
  }
  while (step < k) {
    v = apply_rows(z, rows, v);
    ++step;
  }
  FpVec vv = v;
  trim(vv);
  return sub(z, vv, FpVec{0, 1}).empty();
}

FpVec least_irreducible(const Zp& z, unsigned k) {
  if (k == 1) return FpVec{0, 1};
  // enumerate monic candidates in lex order, coefficients compared
  // low-degree first (c0 most significant digit); c0 = 0 is never irreducible
  FpVec c(k, 0);
  c[0] = 1;
  while (true) {
    FpVec m = c;
    m.push_back(1);
    if (is_irreducible(z, m)) return m;
    // increment: c[k-1] is the fastest digit
    int i = k - 1;
    while (i >= 0) {
      if (++c[i] < z.p) break;
      c[i] = 0;
      --i;
    }
    if (i < 0) throw std::logic_error("least_irreducible: exhausted");
  }
}

}  // namespace fp

// ---------------------------------------------------------------- ExtField

void ExtField::emul(const uint64_t* a, const uint64_t* b, uint64_t* out,
                    uint64_t* scratch) const {
  unsigned n = 2 * k - 1;
  for (unsigned i = 0; i < n; ++i) scratch[i] = 0;
  for (unsigned i = 0; i < k; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < k; ++j) scratch[i + j] += a[i] * b[j];
  }
  for (unsigned i = 0; i < n; ++i) scratch[i] = zp.reduce(scratch[i]);
  for (unsigned i = n; i-- > k;) {
    uint64_t c = scratch[i];
    if (!c) continue;
    scratch[i] = 0;
    for (unsigned j = 0; j < k; ++j)
      scratch[i - k + j] = zp.sub(scratch[i - k + j], zp.mul(c, mod[j]));
  }
  for (unsigned i = 0; i < k; ++i) out[i] = scratch[i];
}

void ExtField::esqr(const uint64_t* a, uint64_t* out, uint64_t* scratch) const {
  emul(a, a, out, scratch);
}

const std::vector<FpVec>& ExtField::frobenius_rows() const {
  if (frob_rows_.empty()) {
    auto rows = fp::frob_matrix(zp, mod);
    frob_rows_ = std::move(rows);
  }
  return frob_rows_;
}

namespace {
std::mutex g_field_mutex;
std::map<std::pair<uint64_t, unsigned>, FieldPtr> g_field_cache;
}  // namespace

FieldPtr make_field_with_modulus(uint64_t p, FpVec mod, bool check) {
  if (!is_prime(BigInt((unsigned long)p)))
    throw std::domain_error("make_field: p not prime");
  Zp z(p);
  fp::trim(mod);
  if (fp::deg(mod) < 1 || mod.back() != 1)
    throw std::domain_error("make_field: modulus must be monic of degree >= 1");
  if (check && !fp::is_irreducible(z, mod))
    throw std::domain_error("make_field: modulus not irreducible");
  auto F = std::make_shared<ExtField>();
  F->zp = z;
  F->k = fp::deg(mod);
  F->mod = std::move(mod);
  return F;
}

FieldPtr make_ext(uint64_t p, unsigned k) {
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto key = std::make_pair(p, k);
  auto it = g_field_cache.find(key);
  if (it != g_field_cache.end()) return it->second;
  if (!is_prime(BigInt((unsigned long)p)))
    throw std::domain_error("make_ext: p not prime");
  Zp z(p);
  FieldPtr F = make_field_with_modulus(p, fp::least_irreducible(z, k), false);
  g_field_cache[key] = F;
  return F;
}

// ---------------------------------------------------------------- FFElem

std::string FFElem::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

FFElem ff_zero(const ExtField* F) { return FFElem(F, FpVec(F->k, 0)); }

FFElem ff_one(const ExtField* F) {
  FpVec c(F->k, 0);
  c[0] = 1 % F->p();
  return FFElem(F, std::move(c));
}

FFElem ff_const(const ExtField* F, uint64_t v) {
  FpVec c(F->k, 0);
  c[0] = v % F->p();
  return FFElem(F, std::move(c));
}

FFElem ff_from_poly(const ExtField* F, const FpVec& a) {
  FpVec r = fp::rem(F->zp, a, F->mod);
  r.resize(F->k, 0);
  return FFElem(F, std::move(r));
}

FFElem ff_from_int(const ExtField* F, const BigInt& n) {
  BigInt m = n % BigInt((unsigned long)F->p());
  if (m < 0) m += BigInt((unsigned long)F->p());
  return ff_const(F, m.get_ui());
}

static void check_same(const FFElem& a, const FFElem& b) {
  if (a.F != b.F) throw std::domain_error("FFElem: field mismatch");
}

FFElem operator+(const FFElem& a, const FFElem& b) {
  check_same(a, b);
  FFElem r(a.F, FpVec(a.F->k));
  for (unsigned i = 0; i < a.F->k; ++i) r.c[i] = a.F->zp.add(a.c[i], b.c[i]);
  return r;
}

FFElem operator-(const FFElem& a, const FFElem& b) {
  check_same(a, b);
  FFElem r(a.F, FpVec(a.F->k));
  for (unsigned i = 0; i < a.F->k; ++i) r.c[i] = a.F->zp.sub(a.c[i], b.c[i]);
  return r;
}

FFElem operator-(const FFElem& a) {
  FFElem r(a.F, FpVec(a.F->k));
  for (unsigned i = 0; i < a.F->k; ++i) r.c[i] = a.F->zp.neg(a.c[i]);
  return r;
}

FFElem operator*(const FFElem& a, const FFElem& b) {
  check_same(a, b);
  FFElem r(a.F, FpVec(a.F->k));
  std::vector<uint64_t> scratch(2 * a.F->k);
  a.F->emul(a.c.data(), b.c.data(), r.c.data(), scratch.data());
  return r;
}

bool operator==(const FFElem& a, const FFElem& b) {
  return a.F == b.F && a.c == b.c;
}

bool elem_less(const FFElem& a, const FFElem& b) { return a.c < b.c; }

FFElem ff_inv(const FFElem& a) {
  if (a.is_zero()) throw std::domain_error("ff_inv: zero");
  // extended Euclid on (poly of a, modulus)
  const Zp& z = a.F->zp;
  FpVec r0 = a.F->mod, r1 = a.c;
  fp::trim(r1);
  FpVec s0{}, s1{1};
  while (!r1.empty()) {
    FpVec q, r;
    fp::divrem(z, r0, r1, q, r);
    FpVec s = fp::sub(z, s0, fp::mul(z, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 = gcd (constant since modulus irreducible)
  if (fp::deg(r0) != 0) throw std::logic_error("ff_inv: non-invertible");
  FpVec res = fp::scal(z, s0, z.inv(r0[0]));
  res.resize(a.F->k, 0);
  return FFElem(a.F, std::move(res));
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * ff_inv(b); }

FFElem ff_pow(const FFElem& a, const BigInt& e) {
  if (e < 0) return ff_pow(ff_inv(a), -e);
  FFElem r = ff_one(a.F);
  if (e == 0) return r;
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * a;
  }
  return r;
}

FFElem frobenius(const FFElem& a) {
  auto& rows = a.F->frobenius_rows();
  FpVec out = fp::apply_rows(a.F->zp, rows, a.c);
  return FFElem(a.F, std::move(out));
}

std::optional<FFElem> ff_sqrt(const FFElem& a) {
  const ExtField* F = a.F;
  if (a.is_zero()) return ff_zero(F);
  if (F->p() == 2) {
    FFElem r = a;
    for (unsigned i = 0; i + 1 < F->k; ++i) r = r * r;
    return r;
  }
  BigInt q = F->order();
  BigInt half = (q - 1) / 2;
  FFElem ls = ff_pow(a, half);
  if (!(ls == ff_one(F))) return std::nullopt;
  // Tonelli-Shanks
  BigInt m = q - 1;
  unsigned v = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++v;
  }
  if (v == 1) {
    FFElem r = ff_pow(a, (q + 1) / 4);
    return elem_less(r, -r) ? r : -r;
  }
  // deterministic non-residue search (odometer order, lazy)
  FFElem n = ff_zero(F);
  {
    FpVec cand(F->k, 0);
    while (true) {
      unsigned j = 0;
      while (j < F->k) {
        if (++cand[j] < F->p()) break;
        cand[j] = 0;
        ++j;
      }
      if (j == F->k) throw std::logic_error("ff_sqrt: no non-residue");
      FFElem e(F, cand);
      if (!(ff_pow(e, half) == ff_one(F))) {
        n = e;
        break;
      }
    }
  }
  FFElem c = ff_pow(n, m);
  FFElem t = ff_pow(a, m);
  FFElem r = ff_pow(a, (m + 1) / 2);
  unsigned mexp = v;
  FFElem one = ff_one(F);
  while (!(t == one)) {
    FFElem tt = t;
    unsigned i = 0;
    while (!(tt == one)) {
      tt = tt * tt;
      ++i;
      if (i == mexp) return std::nullopt;
    }
    FFElem b = c;
    for (unsigned j = 0; j + i + 1 < mexp; ++j) b = b * b;
    mexp = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return elem_less(r, -r) ? r : -r;
}

std::vector<FFElem> enumerate(const ExtField* F, uint64_t cap) {
  BigInt q = F->order();
  if (q > BigInt((unsigned long)cap))
    throw std::domain_error("enumerate: field exceeds cap");
  uint64_t n = q.get_ui();
  std::vector<FFElem> out;
  out.reserve(n);
  FpVec c(F->k, 0);
  for (uint64_t i = 0; i < n; ++i) {
    out.emplace_back(F, c);
    unsigned j = 0;
    while (j < F->k) {
      if (++c[j] < F->p()) break;
      c[j] = 0;
      ++j;
    }
  }
  return out;
}

FpVec minimal_polynomial(const FFElem& e) {
  const ExtField* F = e.F;
  const Zp& z = F->zp;
  unsigned k = F->k;
  // echelon rows over F_p with combination tracking
  std::vector<FpVec> rows, combos;
  std::vector<int> pivots;
  FFElem pw = ff_one(F);
  for (unsigned d = 0; d <= k; ++d) {
    FpVec v = pw.c;
    FpVec combo(k + 2, 0);
    combo[d] = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      uint64_t coef = v[pivots[r]];
      if (!coef) continue;
      for (unsigned i = 0; i < k; ++i) v[i] = z.sub(v[i], z.mul(coef, rows[r][i]));
      for (unsigned i = 0; i < k + 2; ++i)
        combo[i] = z.sub(combo[i], z.mul(coef, combos[r][i]));
    }
    int piv = -1;
    for (unsigned i = 0; i < k; ++i)
      if (v[i]) {
        piv = i;
        break;
      }
    if (piv < 0) {
      FpVec mp(combo.begin(), combo.begin() + d + 1);
      return fp::monic(z, std::move(mp));
    }
    uint64_t inv = z.inv(v[piv]);
    for (unsigned i = 0; i < k; ++i) v[i] = z.mul(v[i], inv);
    for (unsigned i = 0; i < k + 2; ++i) combo[i] = z.mul(combo[i], inv);
    // keep the echelon fully reduced
    for (size_t r = 0; r < rows.size(); ++r) {
      uint64_t coef = rows[r][piv];
      if (!coef) continue;
      for (unsigned i = 0; i < k; ++i)
        rows[r][i] = z.sub(rows[r][i], z.mul(coef, v[i]));
      for (unsigned i = 0; i < k + 2; ++i)
        combos[r][i] = z.sub(combos[r][i], z.mul(coef, combo[i]));
    }
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(piv);
    pw = pw * e;
  }
  throw std::logic_error("minimal_polynomial: no dependence found");
}

namespace {

// nullspace basis of the F_p-linear map v -> frob^d(v) - v on T
std::vector<FpVec> subfield_basis(const ExtField* T, unsigned d) {
  const Zp& z = T->zp;
  unsigned k = T->k;
  // matrix rows: image of basis vector t^j
  std::vector<FpVec> M(k);
  auto& rows = T->frobenius_rows();
  for (unsigned j = 0; j < k; ++j) {
    FpVec v(k, 0);
    v[j] = 1;
    for (unsigned i = 0; i < d; ++i) v = fp::apply_rows(z, rows, v);
    v[j] = z.sub(v[j], 1);
    M[j] = std::move(v);
  }
  // transpose so columns = basis images; solve M^T x = 0 by Gaussian elim
  // treat unknown x_j as coefficient of t^j: condition sum_j x_j M[j][i] = 0
  std::vector<FpVec> A(k, FpVec(k, 0));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) A[i][j] = M[j][i];
  std::vector<int> pivot_col(k, -1);
  unsigned rank = 0;
  for (unsigned col = 0; col < k && rank < k; ++col) {
    unsigned sel = rank;
    while (sel < k && A[sel][col] == 0) ++sel;
    if (sel == k) continue;
    std::swap(A[sel], A[rank]);
    uint64_t inv = z.inv(A[rank][col]);
    for (unsigned j = 0; j < k; ++j) A[rank][j] = z.mul(A[rank][j], inv);
    for (unsigned r = 0; r < k; ++r) {
      if (r == rank || A[r][col] == 0) continue;
      uint64_t f = A[r][col];
      for (unsigned j = 0; j < k; ++j) A[r][j] = z.sub(A[r][j], z.mul(f, A[rank][j]));
    }
    pivot_col[rank] = col;
    ++rank;
  }
  std::vector<bool> is_pivot(k, false);
  for (unsigned r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
  std::vector<FpVec> basis;
  for (unsigned free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    FpVec v(k, 0);
    v[free] = 1;
    for (unsigned r = 0; r < rank; ++r)
      v[pivot_col[r]] = z.neg(A[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// one root of a squarefree totally-split polynomial over its own field
FFElem one_root_split(FqVec g, XorShift& rng) {
  const ExtField* F = g.front().F;
  while (fq::deg(g) > 1) {
    FqVec h;
    if (F->p() == 2) {
      // trace splitting: gcd(g, Tr(c*y)) for random c
      FpVec cv(F->k);
      for (auto& x : cv) x = rng.next() & 1;
      FFElem c(F, cv);
      FqVec cy{ff_zero(F), c};
      FqVec tr = fq::rem(cy, g);
      FqVec acc = tr;
      BigInt q = F->order();
      size_t m = mpz_sizeinbase(q.get_mpz_t(), 2) - 1;  // q = 2^m
      for (size_t i = 1; i < m; ++i) {
        tr = fq::rem(fq::mul(tr, tr), g);
        acc = fq::add(acc, tr);
      }
      h = fq::gcd(acc, g);
    } else {
      FpVec dv(F->k);
      for (auto& x : dv) x = rng.next() % F->p();
      FFElem delta(F, dv);
      FqVec base{delta, ff_one(F)};
      BigInt e = (F->order() - 1) / 2;
      FqVec pw = fq::powmod(base, e, g);
      if (!pw.empty()) pw[0] = pw[0] - ff_one(F);
      fq::trim(pw);
      h = fq::gcd(pw, g);
    }
    int dh = fq::deg(h);
    if (dh <= 0 || dh == fq::deg(g)) continue;
    FqVec other;
    {
      FqVec q, r;
      fq::divrem(g, h, q, r);
      other = q;
    }
    g = fq::deg(h) <= fq::deg(other) ? h : other;
    g = fq::monic(std::move(g));
  }
  return -(g[0] / g[1]);
}

}  // namespace

std::vector<FFElem> roots_in_field(const FpVec& g, const ExtField* T) {
  const Zp& z = T->zp;
  int d = fp::deg(g);
  if (d < 1) throw std::domain_error("roots_in_field: constant input");
  if (T->k % d != 0)
    throw std::domain_error("roots_in_field: degree does not divide");
  if (d == 1) {
    uint64_t r = z.mul(z.neg(g[0]), z.inv(g[1]));
    return {ff_const(T, r)};
  }
  FFElem theta = ff_zero(T);
  if ((int)T->k == d && fp::monic(z, g) == T->mod) {
    FpVec c(T->k, 0);
    c[1] = 1;
    theta = FFElem(T, c);  // t itself
  } else {
    XorShift rng(0xF1E1D5 ^ (T->p() << 8) ^ d);
    auto basis = subfield_basis(T, d);
    // find a generator of the subfield
    FFElem gamma = ff_zero(T);
    FpVec mu;
    for (int attempt = 0;; ++attempt) {
      FpVec v(T->k, 0);
      if (attempt < (int)basis.size()) {
        v = basis[attempt];
      } else {
        for (auto& b : basis) {
          uint64_t c = rng.next() % z.p;
          for (unsigned i = 0; i < T->k; ++i) v[i] = z.add(v[i], z.mul(c, b[i]));
        }
      }
      FFElem cand(T, v);
      FpVec m = minimal_polynomial(cand);
      if (fp::deg(m) == d) {
        gamma = cand;
        mu = m;
        break;
      }
      if (attempt > 200)
        throw std::logic_error("roots_in_field: no subfield generator found");
    }
    // find one root of g in the abstract copy F_p[zvar]/(mu), map via gamma
    FieldPtr S = make_field_with_modulus(z.p, mu, false);
    FqVec gS = fq::monic(fq::from_fp(S.get(), g));
    FFElem root_small = one_root_split(gS, rng);
    // evaluate the root's polynomial expression at gamma
    FFElem theta_img = ff_zero(T);
    for (size_t i = root_small.c.size(); i-- > 0;)
      theta_img = theta_img * gamma + ff_const(T, root_small.c[i]);
    theta = theta_img;
  }
  std::vector<FFElem> roots;
  FFElem cur = theta;
  for (int i = 0; i < d; ++i) {
    roots.push_back(cur);
    cur = frobenius(cur);
  }
  std::sort(roots.begin(), roots.end(), elem_less);
  return roots;
}

FFElem embed(const FFElem& e, const ExtField* target) {
  const ExtField* S = e.F;
  if (S == target) return e;
  if (S->p() != target->p() || target->k % S->k != 0)
    throw std::domain_error("embed: incompatible fields");
  if (S->k == 1) return ff_const(target, e.c[0]);
  auto it = target->embed_cache_.find(S->mod);
  FpVec rootc;
  if (it != target->embed_cache_.end()) {
    rootc = it->second;
  } else {
    auto roots = roots_in_field(S->mod, target);
    rootc = roots.front().c;  // least coefficient sequence
    target->embed_cache_[S->mod] = rootc;
  }
  FFElem root(target, rootc);
  FFElem out = ff_zero(target);
  for (size_t i = e.c.size(); i-- > 0;)
    out = out * root + ff_const(target, e.c[i]);
  return out;
}

}  // namespace modaut
