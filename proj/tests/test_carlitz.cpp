#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffrep/carlitz.hpp"

using namespace ffrep;

namespace {
TruncSeries fq_series(const FqCtx* F, std::mt19937_64& rng, int ram = 1, int lo = -2) {
  TruncSeries s = TruncSeries::zero_to_prec(ram, 50 * ram);
  for (int n = lo; n < lo + 10; ++n) {
    uint64_t c = rng() % F->q;
    if (c) s += TruncSeries::monomial(ram, n, RatFunc(FqElem::from_index(F, c)));
  }
  return s;
}
}  // namespace

TEST_CASE("carlitz factorials") {
  for (uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    const FqCtx* F = fq_context_q(q);
    CHECK(carlitz_factorial(F, 0).is_one());
    // D_1 = theta^q - theta, also the product over monic linear polys
    APoly d1 = carlitz_factorial(F, 1);
    CHECK(d1 == APoly::theta_pow(F, size_t(q)) - APoly::theta(F));
    APoly brute = APoly::one(F);
    MonicRange(F, 1).for_each([&](const APoly& f) { brute *= f; });
    CHECK(d1 == brute);
    // D_2 via recursion equals the brute product of all monic quadratics
    if (q <= 3) {
      APoly d2 = carlitz_factorial(F, 2);
      APoly brute2 = APoly::one(F);
      MonicRange(F, 2).for_each([&](const APoly& f) { brute2 *= f; });
      CHECK(d2 == brute2);
      // and the closed form (theta^{q^2} - theta)(theta^q - theta)^q
      CHECK(d2 == (APoly::theta_pow(F, size_t(q * q)) - APoly::theta(F)) * d1.pow(q));
    }
  }
}

TEST_CASE("twisted polynomial composition law") {
  const FqCtx* F = fq_context_q(3);
  // (c tau)(c' tau) = c tau(c') tau^2 on 1x1 matrices
  std::mt19937_64 rng(3);
  TruncSeries c = fq_series(F, rng), cp = fq_series(F, rng);
  TwistedPoly a, b;
  a.q = b.q = 3;
  MatL ma(1, 1), mb(1, 1), zero(1, 1);
  zero.setZero();
  ma(0, 0) = LambdaElem(c);
  mb(0, 0) = LambdaElem(cp);
  a.coeff = {zero, ma};
  b.coeff = {zero, mb};
  TwistedPoly ab = a.compose(b);
  REQUIRE(ab.coeff.size() == 3);
  CHECK((ab.coeff[2](0, 0) - LambdaElem(c * cp.tau(3))).is_zero_to_prec());
  CHECK(ab.coeff[0](0, 0).is_zero_to_prec());
  CHECK(ab.coeff[1](0, 0).is_zero_to_prec());
}

TEST_CASE("carlitz action: C_theta, C_1, and the monoid law") {
  std::mt19937_64 rng(7);
  for (uint64_t q : {2ull, 3ull}) {
    const FqCtx* F = fq_context_q(q);
    MatL m(1, 1);
    m(0, 0) = LambdaElem(fq_series(F, rng));
    // C_1 = id
    MatL c1 = carlitz_action(APoly::one(F), m, q);
    CHECK((c1(0, 0) - m(0, 0)).is_zero_to_prec());
    // C_theta(m) = theta m + tau(m)
    MatL ct = carlitz_action(APoly::theta(F), m, q);
    LambdaElem expect = TruncSeries::monomial(1, -1, RatFunc(FqElem::one(F))) * m(0, 0) + m(0, 0).tau(q);
    CHECK((ct(0, 0) - expect).is_zero_to_prec());
    // C_{ab} = C_a . C_b on random a, b
    for (int it = 0; it < 6; ++it) {
      APoly a = APoly::from_index(F, 1 + rng() % 15);
      APoly b = APoly::from_index(F, 1 + rng() % 15);
      MatL lhs = carlitz_action(a * b, m, q);
      MatL rhs = carlitz_action(a, carlitz_action(b, m, q), q);
      CHECK((lhs(0, 0) - rhs(0, 0)).is_zero_to_prec());
    }
    // TwistedPoly route agrees
    APoly a = APoly::from_index(F, 1 + rng() % 15);
    TwistedPoly cp = TwistedPoly::c_poly(a, 1);
    MatL via_tp = cp.apply(m);
    MatL direct = carlitz_action(a, m, q);
    CHECK((via_tp(0, 0) - direct(0, 0)).is_zero_to_prec());
  }
}

TEST_CASE("exp_C: kernel, F_q-linearity, and the module-map identity") {
  Precision prec;
  for (uint64_t q : {2ull, 3ull}) {
    const FqCtx* F = fq_context_q(q);
    // exp_C(0) = 0
    MatL z(1, 1);
    z.setZero();
    CHECK(exp_carlitz(z, q, prec)(0, 0).is_exact_zero());
    // exp_C(pitilde) = 0 to precision
    MatL p(1, 1);
    p(0, 0) = pitilde(F);
    MatL ep = exp_carlitz(p, q, prec);
    CHECK(ep(0, 0).is_zero_to_prec());
    CHECK(ep(0, 0).prec_val() >= Val::of(60, 1));
    // exp_C(theta f) = C_theta(exp_C(f)) on random f
    std::mt19937_64 rng(11);
    for (int it = 0; it < 4; ++it) {
      MatL f(1, 1), tf(1, 1);
      f(0, 0) = LambdaElem(fq_series(F, rng, 1, 1));
      tf(0, 0) = TruncSeries::monomial(1, -1, RatFunc(FqElem::one(F))) * f(0, 0);
      MatL lhs = exp_carlitz(tf, q, prec);
      MatL rhs = carlitz_action(APoly::theta(F), exp_carlitz(f, q, prec), q);
      CHECK((lhs(0, 0) - rhs(0, 0)).is_zero_to_prec());
    }
  }
}

TEST_CASE("lattice exponential is A-periodic and u is invariant") {
  Precision prec;
  for (uint64_t q : {2ull, 3ull}) {
    const FqCtx* F = fq_context_q(q);
    // z = theta^{5/2}: exponent units -5 at ram 2
    TruncSeries z = TruncSeries::monomial(2, -5, RatFunc(FqElem::one(F)));
    TruncSeries ez = e_lattice(z, q, prec);
    CHECK(!ez.is_zero_to_prec());
    // invariance under z -> z + a for deg a <= 2
    for (uint64_t idx : {1ull, 2ull, 5ull}) {
      APoly a = APoly::from_index(F, idx % (F->q * F->q * F->q));
      TruncSeries za = z + TruncSeries::from_apoly(a, 2);
      TruncSeries eza = e_lattice(za, q, prec);
      CHECK((eza - ez).is_zero_to_prec());
      CHECK((u_eval(za, q, prec) - u_eval(z, q, prec)).is_zero_to_prec());
    }
    // |u(z)| < 1 for large imaginary part
    CHECK(u_eval(z, q, prec).valuation() > Val::of(0, 1));
    // points without odd part are rejected
    CHECK_THROWS_AS(u_eval(TruncSeries::monomial(2, -4, RatFunc(FqElem::one(F))), q, prec),
                    PointOnBoundary);
  }
}

TEST_CASE("scalar exp_C at a polynomial agrees with the matrix route") {
  Precision prec;
  const FqCtx* F = fq_context_q(3);
  TruncSeries z = TruncSeries::from_apoly(APoly::theta(F)).truncated(60);
  TruncSeries e1 = exp_carlitz_scalar(z, 3, prec);
  MatL m(1, 1);
  m(0, 0) = LambdaElem(z);
  TruncSeries e2 = exp_carlitz(m, 3, prec)(0, 0).scalar_part();
  CHECK((e1 - e2).is_zero_to_prec());
}
