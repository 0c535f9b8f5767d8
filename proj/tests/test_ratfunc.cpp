#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffrep/ratfunc.hpp"

using namespace ffrep;

namespace {
RatFunc random_rf(const FqCtx* F, int nvars, std::mt19937_64& rng) {
  auto rand_poly = [&](bool nonzero) {
    MultiPoly p;
    int terms = 1 + int(rng() % 4);
    for (int t = 0; t < terms; ++t) {
      ExpVec ev;
      for (int v = 0; v < nvars; ++v) ev.e[size_t(v)] = uint16_t(rng() % 3);
      p += MultiPoly::monomial(ev, FqElem::from_index(F, rng() % F->q));
    }
    if (nonzero && p.is_zero()) p = MultiPoly(FqElem::one(F));
    return p;
  };
  return RatFunc(rand_poly(false), rand_poly(true));
}
}  // namespace

TEST_CASE("univariate fractions reduce to monic denominator") {
  const FqCtx* F = fq_context_q(3);
  MultiPoly t = MultiPoly::variable(0, F);
  // (t^2 - 1)/(t - 1) = t + 1
  RatFunc r(t * t - MultiPoly(FqElem::one(F)), t - MultiPoly(FqElem::one(F)));
  CHECK(r.is_polynomial());
  CHECK(r == RatFunc(t + MultiPoly(FqElem::one(F))));
}

TEST_CASE("cross-multiplication equality is consistent with arithmetic") {
  std::mt19937_64 rng(5);
  const FqCtx* F = fq_context_q(3);
  for (int nvars : {1, 2, 3}) {
    for (int it = 0; it < 60; ++it) {
      RatFunc a = random_rf(F, nvars, rng);
      RatFunc b = random_rf(F, nvars, rng);
      RatFunc c = random_rf(F, nvars, rng);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == RatFunc(1));
        // equality is an equivalence consistent with scaling by any nonzero c
        if (!c.is_zero()) CHECK(a == (a * c) / c);
      }
    }
  }
}

TEST_CASE("substitution and evaluation") {
  const FqCtx* F = fq_context_q(5);
  RatFunc t1 = RatFunc::variable(0, F), t2 = RatFunc::variable(1, F);
  RatFunc f = t1 * t1 + t2;
  // t1 -> t2^2 gives t2^4 + t2
  std::vector<MultiPoly> images(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) images[size_t(v)] = MultiPoly::variable(v, F);
  images[0] = MultiPoly::variable(1, F) * MultiPoly::variable(1, F);
  RatFunc g = f.substitute(images);
  CHECK(g == t2.pow(4) + t2);
  // evaluation
  std::vector<FqElem> pt(kMaxVars, FqElem::zero(F));
  pt[0] = FqElem(F, 2);
  pt[1] = FqElem(F, 3);
  CHECK(f.eval(pt) == FqElem(F, 4 + 3));
}

TEST_CASE("derivative satisfies the product rule") {
  std::mt19937_64 rng(17);
  const FqCtx* F = fq_context_q(3);
  for (int it = 0; it < 40; ++it) {
    RatFunc a = random_rf(F, 2, rng);
    RatFunc b = random_rf(F, 2, rng);
    CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
  }
}
