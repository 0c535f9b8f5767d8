#include "ffrep/ratpoly.hpp"

namespace ffrep {

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.is_zero()) throw ZeroDivision("RatPoly::divmod");
  q = RatPoly();
  r = a;
  RatFunc li = b.lead().inverse();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    RatFunc f = r.lead() * li;
    size_t k = size_t(r.deg() - b.deg());
    std::vector<RatFunc> qc(k + 1);
    qc[k] = f;
    RatPoly m(std::move(qc));
    q = q + m;
    r = r - m * b;
  }
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly powmod(const RatPoly& base, uint64_t n, const RatPoly& mod) {
  RatPoly r(1), b = base % mod;
  while (n) {
    if (n & 1) r = r * b % mod;
    if (n >>= 1) b = b * b % mod;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    if (p.coeffs()[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p.coeffs()[i] << ")";
    if (i > 0) os << "*x";
    if (i > 1) os << "^" << i;
  }
  return os;
}

std::vector<APoly> to_bipoly_primitive(const RatPoly& f, int var, const FqCtx* F) {
  // common denominator
  MultiPoly den(FqElem::one(F));
  for (const auto& c : f.coeffs()) {
    if (c.is_zero()) continue;
    // accumulate lcm-ish: multiply by the factor den(c)/gcd; with univariate
    // reduced fractions a plain product is fine (sizes stay small here)
    den *= c.den();
  }
  std::vector<APoly> out;
  for (const auto& c : f.coeffs()) {
    RatFunc cleared = c * RatFunc(den);
    if (!cleared.is_polynomial()) throw Error("to_bipoly: clearing failed");
    MultiPoly p = cleared.polynomial();
    APoly a = p.is_zero() ? APoly() : p.to_apoly(var);
    // coerce literal coefficients into F
    std::vector<FqElem> cc;
    for (int i = 0; i <= a.deg(); ++i) cc.push_back(a.coeff(size_t(i)).coerced(F));
    out.push_back(APoly(F, cc));
  }
  // remove content
  APoly content;
  for (const auto& a : out)
    if (!a.is_zero()) content = content.is_zero() ? a : gcd(content, a);
  if (!content.is_zero() && content.deg() >= 1)
    for (auto& a : out)
      if (!a.is_zero()) a = a / content;
  // normalize so the x-leading coefficient is monic in t
  if (!out.empty() && !out.back().is_zero()) {
    FqElem li = out.back().lead().inverse();
    for (auto& a : out) a = li * a;
  }
  return out;
}

}  // namespace ffrep
