#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffrep/algrep.hpp"

using namespace ffrep;

namespace {
// polynomial ring over K_s in theta, for the symbolic companion check
using ThetaPoly = RatPoly;

ThetaPoly theta_poly_of(const APoly& a) {
  std::vector<RatFunc> c;
  for (int i = 0; i <= a.deg(); ++i) c.push_back(RatFunc(a.coeff(size_t(i))));
  return ThetaPoly(c);
}
}  // namespace

TEST_CASE("chi_t evaluation") {
  const FqCtx* F = fq_context_q(3);
  AlgebraRep chi = AlgebraRep::chi_t(F);
  // theta^2 + 1 -> t^2 + 1
  APoly a = APoly::theta_pow(F, 2) + APoly::one(F);
  RatFunc t = RatFunc::variable(0, F);
  CHECK(sigma_eval(chi, a)(0, 0) == t * t + RatFunc(1));
  // theta -> t (identity on the generator)
  CHECK(sigma_eval(chi, APoly::theta(F))(0, 0) == t);
}

TEST_CASE("companion matrix shape and reduction identity") {
  const FqCtx* F = fq_context_q(3);
  RatFunc t = RatFunc::variable(0, F);
  // P = x^2 - t
  RatPoly P({RatFunc() - t, RatFunc(), RatFunc(1)});
  AlgebraRep sp = companion_sigma(P, F);
  CHECK(sp.d == 2);
  CHECK(sp.theta(0, 0).is_zero());
  CHECK(sp.theta(0, 1) == RatFunc(1));
  CHECK(sp.theta(1, 0) == t);
  CHECK(sp.theta(1, 1).is_zero());
  // 1x1 companion of x - c
  RatPoly lin({RatFunc() - t, RatFunc(1)});
  CHECK(companion_sigma(lin, F).theta(0, 0) == t);
  CHECK_THROWS_AS(companion_sigma(RatPoly({RatFunc(1), t}), F), NotMonic);

  // sigma_P(a) w == a w mod P, w = (1, theta)^T, checked symbolically:
  // row i of sigma_P(a) lists the coefficients of theta^i * a mod P
  std::mt19937_64 rng(5);
  for (int it = 0; it < 12; ++it) {
    APoly a = APoly::from_index(F, rng() % 200);
    MatR sa = sigma_eval(sp, a);
    ThetaPoly ap = theta_poly_of(a);
    for (int i = 0; i < 2; ++i) {
      ThetaPoly lhs = ap;
      for (int k = 0; k < i; ++k) lhs = lhs * ThetaPoly::x();
      ThetaPoly red = lhs % P;
      for (int j = 0; j < 2; ++j) CHECK(red.coeff(size_t(j)) == sa(i, j));
    }
  }
  // matrix chi_t_eval cross-check against Cayley-Hamilton reduction:
  // a(companion(P)) equals (a mod P)(companion(P))
  APoly a = APoly::theta_pow(F, 2) + APoly::theta(F);
  MatR direct = sigma_eval(sp, a);
  ThetaPoly red = theta_poly_of(a) % P;
  MatR via_red = red.eval(sp.theta);
  CHECK(mat_eq<RatFunc>(direct, via_red));
}

TEST_CASE("sigma is a ring homomorphism") {
  const FqCtx* F = fq_context_q(3);
  RatFunc t = RatFunc::variable(0, F);
  RatPoly P({RatFunc() - t, RatFunc(), RatFunc(1)});
  AlgebraRep sp = companion_sigma(P, F);
  std::mt19937_64 rng(9);
  for (int it = 0; it < 20; ++it) {
    APoly a = APoly::from_index(F, rng() % 300);
    APoly b = APoly::from_index(F, rng() % 300);
    CHECK(mat_eq<RatFunc>(sigma_eval(sp, a * b), sigma_eval(sp, a) * sigma_eval(sp, b)));
    CHECK(mat_eq<RatFunc>(sigma_eval(sp, a + b), sigma_eval(sp, a) + sigma_eval(sp, b)));
  }
}

TEST_CASE("minimal polynomial") {
  const FqCtx* F = fq_context_q(3);
  RatFunc t = RatFunc::variable(0, F);
  RatPoly P({RatFunc() - t, RatFunc(), RatFunc(1)});
  AlgebraRep sp = companion_sigma(P, F);
  CHECK(minpoly(sp) == P);
  // scalar: minpoly of chi_t is x - t
  AlgebraRep chi = AlgebraRep::chi_t(F);
  CHECK(minpoly(chi) == RatPoly({RatFunc() - t, RatFunc(1)}));
}

TEST_CASE("faithfulness") {
  const FqCtx* F = fq_context_q(3);
  RatFunc t = RatFunc::variable(0, F);
  // companion(x^2 - t): char poly has the non-constant coefficient t
  AlgebraRep sp = companion_sigma(RatPoly({RatFunc() - t, RatFunc(), RatFunc(1)}), F);
  auto r1 = is_faithful(sp);
  CHECK(r1.faithful);
  CHECK(r1.witness.deg() >= 1);
  // the witness factor has a coefficient outside F_q (definitional re-check)
  bool has_nonconst = false;
  for (const auto& c : r1.witness.coeffs())
    if (!c.is_zero() && !c.is_constant()) has_nonconst = true;
  CHECK(has_nonconst);

  // constant matrix: all eigenvalues in F_q^{ac}
  MatR m(2, 2);
  m.setZero();
  m(0, 1) = RatFunc(1);
  m(1, 0) = RatFunc(FqElem(F, 2));
  auto r2 = is_faithful(AlgebraRep::from_theta(F, m));
  CHECK(!r2.faithful);

  // companion(x^2 - t x - 1) is faithful
  AlgebraRep sp2 = companion_sigma(RatPoly({RatFunc(-1), RatFunc() - t, RatFunc(1)}), F);
  CHECK(is_faithful(sp2).faithful);
}

TEST_CASE("irreducibility of sigma") {
  for (uint64_t q : {3ull, 5ull}) {
    const FqCtx* F = fq_context_q(q);
    RatFunc t = RatFunc::variable(0, F);
    // x^2 - t irreducible (t is not a square in F_q(t))
    AlgebraRep sp = companion_sigma(RatPoly({RatFunc() - t, RatFunc(), RatFunc(1)}), F);
    CHECK(is_irreducible_sigma(sp).verdict == Verdict::Irreducible);
    // x^2 - t^2 = (x-t)(x+t)
    AlgebraRep sp2 = companion_sigma(RatPoly({RatFunc() - t * t, RatFunc(), RatFunc(1)}), F);
    auto r2 = is_irreducible_sigma(sp2);
    CHECK(r2.verdict == Verdict::Reducible);
    REQUIRE(r2.factor.deg() == 1);
    // the found factor divides the char poly
    CHECK((charpoly(sp2) % r2.factor).is_zero());
  }
  // companion sigma_P irreducible iff P irreducible: P = x^2 - t*x - 1 over F_3
  const FqCtx* F = fq_context_q(3);
  RatFunc t = RatFunc::variable(0, F);
  AlgebraRep sp3 = companion_sigma(RatPoly({RatFunc(-1), RatFunc() - t, RatFunc(1)}), F);
  CHECK(is_irreducible_sigma(sp3).verdict == Verdict::Irreducible);
  // constant-coefficient case: exact for any degree
  AlgebraRep c1 = companion_sigma(RatPoly({RatFunc(1), RatFunc(1), RatFunc(), RatFunc(), RatFunc(1)}), fq_context_q(2));
  CHECK(is_irreducible_sigma(c1).verdict == Verdict::Irreducible);  // x^4+x+1 over F_2
}

TEST_CASE("rational roots") {
  const FqCtx* F = fq_context_q(3);
  RatFunc t = RatFunc::variable(0, F);
  // (x - t)(x - (t+1)) has roots t and t+1
  RatPoly f = RatPoly({RatFunc() - t, RatFunc(1)}) * RatPoly({RatFunc() - t - RatFunc(1), RatFunc(1)});
  auto roots = rational_roots(f, F);
  CHECK(roots.size() == 2);
  // x^2 - t has none
  CHECK(rational_roots(RatPoly({RatFunc() - t, RatFunc(), RatFunc(1)}), F).empty());
}
