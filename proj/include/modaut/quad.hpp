#pragma once

#include <optional>
#include <string>

#include "modaut/numbers.hpp"

namespace modaut {

// Element a + b*sqrt(d) of Q(sqrt d), d in {-1, 2, 3}.
// d = 0 is allowed as "plain rational" so mixed code paths stay uniform;
// a nonzero b then signals a bug and arithmetic throws.
struct QuadElem {
  int d = 0;
  Rational a = 0, b = 0;

  QuadElem() = default;
  QuadElem(Rational ra) : d(0), a(std::move(ra)) {}
  QuadElem(int dd, Rational ra, Rational rb)
      : d(dd), a(std::move(ra)), b(std::move(rb)) {
    if (b == 0) d = dd;  // keep tag even when rational-valued
  }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }
  std::string str() const;
};

int join_tag(int d1, int d2);  // common field tag or throws on clash

QuadElem operator+(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x, const QuadElem& y);
QuadElem operator-(const QuadElem& x);
QuadElem operator*(const QuadElem& x, const QuadElem& y);
QuadElem operator/(const QuadElem& x, const QuadElem& y);
bool operator==(const QuadElem& x, const QuadElem& y);

inline QuadElem quad_conjugate(const QuadElem& z) {
  return QuadElem(z.d, z.a, -z.b);
}
inline Rational quad_norm(const QuadElem& z) {
  return z.a * z.a - Rational(z.d) * z.b * z.b;
}

QuadElem quad_pow(const QuadElem& z, long e);

// Exact roots inside Q(sqrt d). quad_sqrt additionally searches the three
// supported quadratic fields when the input is rational and has no rational
// square root. All solvers are deterministic (canonical sign choice).
std::optional<QuadElem> quad_sqrt(const QuadElem& z);
std::optional<QuadElem> quad_cbrt(const QuadElem& z);
std::optional<QuadElem> quad_kth_root(const QuadElem& z, unsigned k);

}  // namespace modaut
