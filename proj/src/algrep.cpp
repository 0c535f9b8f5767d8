#include "ffrep/algrep.hpp"

#include <random>

namespace ffrep {

AlgebraRep AlgebraRep::from_theta(const FqCtx* F, const MatR& th, std::string tag) {
  AlgebraRep r;
  r.F = F;
  r.d = int(th.rows());
  r.theta = th;
  r.provenance = std::move(tag);
  return r;
}

AlgebraRep AlgebraRep::chi_t(const FqCtx* F, int var) {
  MatR th(1, 1);
  th(0, 0) = RatFunc::variable(var, F);
  return from_theta(F, th, "chi_t" + std::to_string(var + 1));
}

MatR sigma_eval(const AlgebraRep& rep, const APoly& a) {
  const int n = rep.d;
  MatR acc(n, n);
  acc.setZero();
  if (a.is_zero()) return acc;
  for (int i = a.deg(); i >= 0; --i) {
    acc = acc * rep.theta;
    FqElem c = a.coeff(size_t(i));
    if (!c.is_zero())
      for (int k = 0; k < n; ++k) acc(k, k) += RatFunc(c);
  }
  return acc;
}

AlgebraRep companion_sigma(const RatPoly& P, const FqCtx* F) {
  if (P.is_zero() || !P.is_monic()) throw NotMonic("companion_sigma needs a monic polynomial");
  int d = P.deg();
  if (d < 1) throw NotMonic("companion_sigma needs degree >= 1");
  MatR th(d, d);
  th.setZero();
  for (int i = 0; i + 1 < d; ++i) th(i, i + 1) = RatFunc(1);
  for (int j = 0; j < d; ++j) th(d - 1, j) = RatFunc() - P.coeff(size_t(j));
  AlgebraRep r = AlgebraRep::from_theta(F, th, "companion");
  return r;
}

RatPoly charpoly(const AlgebraRep& rep) {
  return RatPoly(charpoly_berkowitz<RatFunc>(rep.theta));
}

RatPoly minpoly(const AlgebraRep& rep) {
  const int n = rep.d;
  // stack vectorized powers I, th, th^2, ... until linearly dependent
  std::vector<MatR> powers;
  MatR p = MatR::Identity(n, n);
  for (int k = 0;; ++k) {
    powers.push_back(p);
    MatR stack(n * n, int(powers.size()));
    for (size_t c = 0; c < powers.size(); ++c)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) stack(i * n + j, int(c)) = powers[c](i, j);
    MatR ns = null_space<RatFunc>(stack);
    if (ns.cols() > 0) {
      // dependence with nonzero top coefficient (the newest power)
      std::vector<RatFunc> coeffs(size_t(k) + 1);
      for (int i = 0; i <= k; ++i) coeffs[size_t(i)] = ns(i, 0);
      RatPoly m((std::vector<RatFunc>(coeffs)));
      return m.monic();
    }
    p = p * rep.theta;
    if (k > n) throw Error("minpoly: no dependence found");
  }
}

FaithfulResult is_faithful(const AlgebraRep& rep) {
  RatPoly chi = charpoly(rep);
  RatPoly h = chi.monic();
  RatPoly removed(1);
  const uint64_t q = rep.F->q;
  for (int k = 1; k <= rep.d; ++k) {
    uint64_t qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    while (h.deg() >= 1) {
      // gcd(h, x^{q^k} - x) via powmod
      RatPoly xqk = powmod(RatPoly::x(), qk, h);
      RatPoly g = gcd(h, xqk - RatPoly::x());
      if (g.deg() < 1) break;
      h = (h / g).monic();
      removed = removed * g;
    }
  }
  FaithfulResult r;
  r.faithful = h.deg() >= 1;
  r.witness = h;
  r.bounded_part = removed;
  return r;
}

namespace {

// all monic divisors paired with unit multiples
std::vector<RatFunc> candidate_ratios(const APoly& num_poly, const APoly& den_poly, const FqCtx* F,
                                      uint64_t seed) {
  std::vector<RatFunc> out;
  std::vector<APoly> nums = num_poly.is_zero() ? std::vector<APoly>{APoly::one(F)}
                                               : monic_divisors(num_poly, seed);
  std::vector<APoly> dens = den_poly.is_zero() ? std::vector<APoly>{APoly::one(F)}
                                               : monic_divisors(den_poly, seed);
  for (const auto& n : nums)
    for (const auto& d : dens)
      for (uint64_t u = 1; u < F->q; ++u) {
        RatFunc r(MultiPoly::from_apoly(FqElem::from_index(F, u) * n, 0),
                  MultiPoly::from_apoly(d, 0));
        out.push_back(r);
      }
  return out;
}

int svars_of(const RatPoly& f) {
  int top = -1;
  for (const auto& c : f.coeffs()) {
    for (int v : c.num().vars_used()) top = std::max(top, v);
    for (int v : c.den().vars_used()) top = std::max(top, v);
  }
  return top + 1;
}

}  // namespace

std::vector<RatFunc> rational_roots(const RatPoly& f, const FqCtx* F, uint64_t seed) {
  std::vector<RatFunc> roots;
  int s = svars_of(f);
  if (s == 0) {
    for (uint64_t i = 0; i < F->q; ++i) {
      RatFunc x(FqElem::from_index(F, i));
      if (f.eval(x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  if (s > 1) throw Unsupported("rational_roots: s >= 2");
  std::vector<APoly> B = to_bipoly_primitive(f, 0, F);
  // x = 0
  if (B.front().is_zero() && f.coeff(0).is_zero()) roots.push_back(RatFunc());
  APoly a0 = B.front(), alead = B.back();
  for (const auto& cand : candidate_ratios(a0, alead, F, seed)) {
    if (f.eval(cand).is_zero()) roots.push_back(cand);
  }
  return roots;
}

IrredResult is_irreducible_sigma(const AlgebraRep& rep, uint64_t seed) {
  IrredResult res;
  RatPoly chi = charpoly(rep).monic();
  const FqCtx* F = rep.F;
  int d = chi.deg();
  if (d <= 1) {
    res.verdict = Verdict::Irreducible;
    res.detail = "degree <= 1";
    return res;
  }
  int s = svars_of(chi);
  if (s == 0) {
    // exact univariate decision over F_q
    std::vector<FqElem> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.push_back(chi.coeff(size_t(i)).constant_value());
    APoly u(F, coeffs);
    if (is_irreducible(u)) {
      res.verdict = Verdict::Irreducible;
      res.detail = "univariate over F_q";
    } else {
      auto fac = factor(u, seed);
      res.verdict = Verdict::Reducible;
      std::vector<RatFunc> fc;
      for (int i = 0; i <= fac[0].first.deg(); ++i)
        fc.push_back(RatFunc(fac[0].first.coeff(size_t(i))));
      res.factor = RatPoly(fc);
      res.detail = "univariate factor over F_q";
    }
    return res;
  }
  if (s == 1 && d <= 3) {
    auto roots = rational_roots(chi, F, seed);
    if (!roots.empty()) {
      res.verdict = Verdict::Reducible;
      res.factor = RatPoly({RatFunc() - roots[0], RatFunc(1)});
      res.detail = "rational root";
    } else {
      res.verdict = Verdict::Irreducible;
      res.detail = "no rational root, degree <= 3";
    }
    return res;
  }
  // sound one-sided specialization: irreducible specialization at extension
  // points implies irreducibility over K_s
  std::mt19937_64 rng(seed ^ 0xabcdef12345ULL);
  uint32_t f_deg = 1;
  {
    uint64_t qf = F->q;
    while (qf <= uint64_t(4 * d) && (f_deg + 1) * F->e <= uint32_t(kMaxExtDegree)) {
      ++f_deg;
      qf *= F->q;
    }
  }
  const FqCtx* E = F;
  if (f_deg > 1) {
    try { E = fq_context(F->p, f_deg * F->e); }
    catch (const ConfigError&) { E = F; }
  }
  for (int attempt = 0; attempt < 24; ++attempt) {
    std::vector<FqElem> pt(kMaxVars, FqElem::zero(E));
    for (int v = 0; v < s; ++v) pt[size_t(v)] = FqElem::from_index(E, rng() % E->q);
    std::vector<FqElem> coeffs;
    bool pole = false;
    for (int i = 0; i <= d; ++i) {
      RatFunc c = chi.coeff(size_t(i));
      try {
        // coefficients live over F; evaluate at points of E via embedding
        RatFunc cE = c;
        coeffs.push_back(embed_eval(cE, pt, E));
      } catch (const ZeroDivision&) { pole = true; break; }
    }
    if (pole) continue;
    APoly u(E, coeffs);
    if (u.deg() == d && is_irreducible(u)) {
      res.verdict = Verdict::Irreducible;
      res.detail = "irreducible specialization";
      return res;
    }
  }
  // last resort certificates: rational roots when s == 1
  if (s == 1) {
    auto roots = rational_roots(chi, F, seed);
    if (!roots.empty()) {
      res.verdict = Verdict::Reducible;
      res.factor = RatPoly({RatFunc() - roots[0], RatFunc(1)});
      res.detail = "rational root";
      return res;
    }
  }
  res.verdict = Verdict::Unknown;
  res.detail = "no decisive specialization";
  return res;
}

}  // namespace ffrep
