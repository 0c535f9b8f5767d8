#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffrep/lambda.hpp"
#include "ffrep/series.hpp"

using namespace ffrep;

namespace {
TruncSeries random_series(const FqCtx* F, std::mt19937_64& rng, int ram = 1) {
  TruncSeries s = TruncSeries::zero_to_prec(ram, 40 * ram);
  int lo = int(rng() % 7) - 3;
  for (int n = lo; n < lo + 12; ++n) {
    uint64_t c = rng() % F->q;
    if (c) s += TruncSeries::monomial(ram, n, RatFunc(FqElem::from_index(F, c)));
  }
  return s;
}
}  // namespace

TEST_CASE("geometric inverse of 1 - 1/theta") {
  const FqCtx* F = fq_context_q(3);
  TruncSeries one(RatFunc(FqElem::one(F)));
  TruncSeries x = one - TruncSeries::monomial(1, 1, RatFunc(FqElem::one(F)));
  TruncSeries inv = x.inverse();
  for (long long n = 0; n < 30; ++n) CHECK(inv.coeff_units(n) == RatFunc(FqElem::one(F)));
  CHECK((x * inv - one).is_zero_to_prec());
}

TEST_CASE("ultrametric triangle inequality and unit inverses") {
  std::mt19937_64 rng(3);
  const FqCtx* F = fq_context_q(5);
  for (int it = 0; it < 80; ++it) {
    TruncSeries a = random_series(F, rng), b = random_series(F, rng);
    Val va = a.valuation(), vb = b.valuation(), vs = (a + b).valuation();
    CHECK(!(vs < std::min(va, vb)));
    if (!(va == vb)) CHECK(vs == std::min(va, vb));
    if (!a.is_zero_to_prec()) {
      TruncSeries prod = a * a.inverse() - TruncSeries(1);
      CHECK(prod.is_zero_to_prec());
    }
  }
}

TEST_CASE("tau is a ring homomorphism fixing coefficients") {
  std::mt19937_64 rng(9);
  const FqCtx* F = fq_context_q(3);
  const uint64_t q = 3;
  for (int it = 0; it < 40; ++it) {
    TruncSeries a = random_series(F, rng), b = random_series(F, rng);
    CHECK(((a * b).tau(q) - a.tau(q) * b.tau(q)).is_zero_to_prec());
    CHECK(((a + b).tau(q) - (a.tau(q) + b.tau(q))).is_zero_to_prec());
  }
  // tau(theta^{-1}) = theta^{-q}
  TruncSeries ti = TruncSeries::monomial(1, 1, RatFunc(FqElem::one(F)));
  CHECK(ti.tau(q).valuation() == Val::of(3, 1));
  // constants are fixed
  TruncSeries c(RatFunc(FqElem(F, 2)));
  CHECK(c.tau(q) == c);
}

TEST_CASE("tau-fixed truncated solutions are constant") {
  // solve tau(x) = x coefficient-by-coefficient in a truncated window:
  // coefficient at m must equal coefficient at m/q whenever q | m, else 0.
  const uint64_t q = 2;
  const long long W = 32;
  // the general solution within the window has c_m = 0 for 0 < m < W and
  // c_m arbitrary for m = 0; verify by constructing and applying tau
  const FqCtx* F = fq_context_q(q);
  TruncSeries x = TruncSeries(RatFunc(FqElem::one(F))).truncated(W);
  CHECK((x.tau(q) - x).is_zero_to_prec());
  // and a non-constant candidate fails
  TruncSeries y = x + TruncSeries::monomial(1, 3, RatFunc(FqElem::one(F)));
  CHECK(!(y.tau(q) - y).is_zero_to_prec());
}

TEST_CASE("lambda relation and tau twist") {
  for (uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    const FqCtx* F = fq_context_q(q);
    const TruncSeries theta = TruncSeries::monomial(1, -1, RatFunc(FqElem::one(F)));
    LambdaElem l = LambdaElem::lambda(F);
    // lambda^{q-1} + theta = 0 exactly
    LambdaElem pw(1);
    for (uint64_t k = 0; k < q - 1; ++k) pw *= l;
    LambdaElem sum = pw + LambdaElem(theta);
    CHECK(sum.is_exact_zero());
    // tau(lambda) = -theta * lambda
    LambdaElem tl = l.tau(q);
    LambdaElem expect = -(theta * l);
    CHECK((tl - expect).is_exact_zero());
    // lambda * lambda^{q-2} = -theta
    LambdaElem pw2(1);
    for (uint64_t k = 0; k < q - 2; ++k) pw2 *= l;
    CHECK((l * pw2 + LambdaElem(theta)).is_exact_zero());
  }
}

TEST_CASE("lambda inverse") {
  std::mt19937_64 rng(21);
  for (uint64_t q : {2ull, 3ull, 4ull}) {
    const FqCtx* F = fq_context_q(q);
    for (int it = 0; it < 12; ++it) {
      std::vector<TruncSeries> comps(size_t(q - 1));
      for (auto& c : comps) c = random_series(F, rng);
      LambdaElem a(q, comps);
      if (a.is_zero_to_prec()) continue;
      LambdaElem prod = a * a.inverse() - LambdaElem(1);
      CHECK(prod.is_zero_to_prec());
    }
  }
}

TEST_CASE("pitilde leading behavior") {
  // pitilde/(theta*lambda) = 1 + O(theta^{1-q}): the i=1 factor is
  // (1 - theta^{1-q})^{-1}
  for (uint64_t q : {2ull, 3ull, 5ull}) {
    const FqCtx* F = fq_context_q(q);
    TruncSeries u = pitilde_unit(F);
    CHECK(u.coeff_units(0) == RatFunc(FqElem::one(F)));
    for (long long n = 1; n < (long long)q - 1; ++n) CHECK(u.coeff_units(n).is_zero());
    CHECK(u.coeff_units((long long)q - 1) == RatFunc(FqElem::one(F)));
    // |pitilde| = q^{q/(q-1)}: valuation -1 - 1/(q-1)
    LambdaElem p = pitilde(F);
    CHECK(p.valuation() == Val::of(-(long long)q, (long long)q - 1));
  }
}

TEST_CASE("pitilde unit is stable under recomputation at higher precision") {
  const FqCtx* F = fq_context_q(2);
  TruncSeries u1 = pitilde_unit(F);
  SeriesCapGuard guard(140);
  TruncSeries u2 = pitilde_unit(F);
  for (long long n = 0; n < u1.prec_units(); ++n) CHECK(u1.coeff_units(n) == u2.coeff_units(n));
  CHECK(u2.prec_units() > u1.prec_units());
}

TEST_CASE("expand_at_infinity") {
  const FqCtx* F = fq_context_q(3);
  // 1/(theta - 1) = sum theta^{-n-1}
  TruncSeries s = expand_at_infinity(APoly::one(F), APoly::theta(F) - APoly::one(F));
  for (long long n = 1; n < 20; ++n) CHECK(s.coeff_units(n) == RatFunc(FqElem::one(F)));
  CHECK(s.coeff_units(0).is_zero());
}

TEST_CASE("precision bookkeeping is sound under recomputation (metamorphic)") {
  const FqCtx* F = fq_context_q(3);
  std::mt19937_64 rng(31);
  TruncSeries a = random_series(F, rng), b = random_series(F, rng);
  TruncSeries low = (a * b.inverse() + a.tau(3)).truncated(30);
  SeriesCapGuard guard(160);
  TruncSeries high = a * b.inverse() + a.tau(3);
  for (long long n = low.lo_units(); n < low.prec_units(); ++n)
    CHECK(low.coeff_units(n) == high.coeff_units(n));
}
