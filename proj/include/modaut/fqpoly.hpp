#pragma once

#include <vector>

#include "modaut/ffield.hpp"

namespace modaut {

// Dense polynomials over an extension field, low-to-high, no trailing zeros.
using FqVec = std::vector<FFElem>;

namespace fq {

void trim(FqVec& a);
inline int deg(const FqVec& a) { return (int)a.size() - 1; }
FqVec add(const FqVec& a, const FqVec& b);
FqVec sub(const FqVec& a, const FqVec& b);
FqVec mul(const FqVec& a, const FqVec& b);
FqVec scal(const FqVec& a, const FFElem& c);
void divrem(const FqVec& a, const FqVec& b, FqVec& q, FqVec& r);
FqVec rem(const FqVec& a, const FqVec& b);
FqVec monic(FqVec a);
FqVec gcd(FqVec a, FqVec b);
FqVec deriv(const FqVec& a);
FFElem eval(const FqVec& a, const FFElem& x);
FqVec powmod(FqVec base, const BigInt& e, const FqVec& mod);
FqVec from_fp(const ExtField* F, const FpVec& a);
FqVec x_poly(const ExtField* F);  // the polynomial y

}  // namespace fq

}  // namespace modaut
