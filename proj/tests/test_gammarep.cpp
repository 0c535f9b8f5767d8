#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffrep/gammarep.hpp"

using namespace ffrep;

TEST_CASE("sym_power basics") {
  const FqCtx* F = fq_context_q(3);
  std::mt19937_64 rng(3);
  GMat g = random_gamma(F, rng, 2);
  // r = 1 is tautological
  Eigen::Matrix<RatFunc, 2, 2> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      std::vector<RatFunc> c;
      for (int k = 0; k <= g(i, j).deg(); ++k) c.push_back(RatFunc(g(i, j).coeff(size_t(k))));
      m(i, j) = RatPoly(c).eval(RatFunc::variable(0, F));
    }
  MatR s1 = sym_power<RatFunc>(m, 1);
  CHECK(s1(0, 0) == m(0, 0));
  CHECK(s1(1, 0) == m(1, 0));
  // r = 0 is trivial
  MatR s0 = sym_power<RatFunc>(m, 0);
  CHECK(s0(0, 0) == RatFunc(1));
  // multiplicativity for r = 4 over F_2
  const FqCtx* F2 = fq_context_q(2);
  std::mt19937_64 rng2(9);
  for (int it = 0; it < 6; ++it) {
    GMat a = random_gamma(F2, rng2, 2), b = random_gamma(F2, rng2, 2);
    auto lift = [&](const GMat& x) {
      Eigen::Matrix<RatFunc, 2, 2> r;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          std::vector<RatFunc> c;
          for (int k = 0; k <= x(i, j).deg(); ++k) c.push_back(RatFunc(x(i, j).coeff(size_t(k))));
          r(i, j) = RatPoly(c).eval(RatFunc::variable(0, F2));
        }
      return r;
    };
    GMat ab = a * b;
    MatR lhs = sym_power<RatFunc>(lift(ab), 4);
    MatR rhs = MatR(sym_power<RatFunc>(lift(a), 4) * sym_power<RatFunc>(lift(b), 4));
    CHECK(mat_eq<RatFunc>(lhs, rhs));
  }
}

TEST_CASE("rho_star matches the displayed 4x4 matrix at l = 1+p") {
  for (uint64_t q : {2ull, 3ull, 5ull}) {
    const FqCtx* F = fq_context_q(q);
    const uint32_t p = F->p;
    RatFunc a = RatFunc::variable(0, F), b = RatFunc::variable(1, F);
    RatFunc c = RatFunc::variable(2, F), d = RatFunc::variable(3, F);
    Eigen::Matrix<RatFunc, 2, 2> g;
    g(0, 0) = a; g(0, 1) = b; g(1, 0) = c; g(1, 1) = d;
    MatR star = rho_star<RatFunc>(g, int(1 + p), p);
    REQUIRE(star.rows() == 4);
    CHECK(star(0, 0) == a.pow(p + 1));
    CHECK(star(0, 1) == a.pow(p) * b);
    CHECK(star(0, 2) == a * b.pow(p));
    CHECK(star(0, 3) == b.pow(p + 1));
    CHECK(star(1, 0) == a.pow(p) * c);
    CHECK(star(1, 1) == a.pow(p) * d);
    CHECK(star(1, 2) == b.pow(p) * c);
    CHECK(star(1, 3) == b.pow(p) * d);
    CHECK(star(2, 0) == a * c.pow(p));
    CHECK(star(2, 1) == b * c.pow(p));
    CHECK(star(2, 2) == a * d.pow(p));
    CHECK(star(2, 3) == b * d.pow(p));
    CHECK(star(3, 0) == c.pow(p + 1));
    CHECK(star(3, 1) == c.pow(p) * d);
    CHECK(star(3, 2) == c * d.pow(p));
    CHECK(star(3, 3) == d.pow(p + 1));
  }
}

TEST_CASE("rho_star is multiplicative and equals sym_power below p") {
  const FqCtx* F = fq_context_q(2);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 8; ++it) {
    GMat a = random_gamma(F, rng, 2), b = random_gamma(F, rng, 2);
    auto lift = [&](const GMat& x) {
      Eigen::Matrix<RatFunc, 2, 2> r;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          std::vector<RatFunc> cc;
          for (int k = 0; k <= x(i, j).deg(); ++k) cc.push_back(RatFunc(x(i, j).coeff(size_t(k))));
          r(i, j) = RatPoly(cc).eval(RatFunc::variable(0, F));
        }
      return r;
    };
    for (int l : {3, 5}) {
      MatR lhs = rho_star<RatFunc>(lift(a * b), l, 2);
      MatR rhs = MatR(rho_star<RatFunc>(lift(a), l, 2) * rho_star<RatFunc>(lift(b), l, 2));
      CHECK(mat_eq<RatFunc>(lhs, rhs));
    }
  }
  // l < p keeps everything
  const FqCtx* F5 = fq_context_q(5);
  RatFunc x = RatFunc::variable(0, F5);
  Eigen::Matrix<RatFunc, 2, 2> g;
  g(0, 0) = x; g(0, 1) = RatFunc(1); g(1, 0) = RatFunc(2); g(1, 1) = x * x;
  CHECK(mat_eq<RatFunc>(rho_star<RatFunc>(g, 3, 5), MatR(sym_power<RatFunc>(g, 3))));
}

TEST_CASE("digit representations") {
  const FqCtx* F = fq_context_q(2);
  // l = p: entries are p-th powers of the tautological image
  GammaRep rp = rep_digits(F, 2);
  GammaRep taut = rep_tautological(F);
  std::mt19937_64 rng(5);
  GMat g = random_gamma(F, rng, 2);
  MatR a = rp.apply(g), b = taut.apply(g);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(a(i, j) == b(i, j).pow(2));
  // dim phi_p(1+p) = 4
  CHECK(rep_digits(F, 3).dim == 4);
  CHECK(phi_p(3, 2) == 4);
  // homomorphism + identity on random pairs
  for (uint64_t l : {1ull, 2ull, 3ull, 5ull}) {
    GammaRep r = rep_digits(F, l);
    std::mt19937_64 rr(17 + l);
    CHECK(homomorphism_check(r, rr, 12, 2));
  }
}

TEST_CASE("intertwiner between rho_star and the digit representation") {
  for (uint32_t p : {2u, 3u}) {
    const FqCtx* F = fq_context(p);
    for (uint64_t l = 2; l <= 2 * p + 1; ++l) {
      if (phi_p(l, p) == l + 1) continue;  // identical spaces, nothing dropped
      GammaRep digits = rep_digits(F, l);
      auto sample = gamma_sample(F, 2);
      std::vector<MatR> a_imgs, b_imgs;
      for (const auto& g : sample) {
        auto m = [&] {
          Eigen::Matrix<RatFunc, 2, 2> r;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              std::vector<RatFunc> cc;
              for (int k = 0; k <= g(i, j).deg(); ++k)
                cc.push_back(RatFunc(g(i, j).coeff(size_t(k))));
              r(i, j) = RatPoly(cc).eval(RatFunc::variable(0, F));
            }
          return r;
        }();
        a_imgs.push_back(rho_star<RatFunc>(m, int(l), p));
        b_imgs.push_back(digits.apply(g));
      }
      auto M = solve_intertwiner(a_imgs, b_imgs, 7);
      REQUIRE(M.has_value());
      // verify on fresh random elements
      std::mt19937_64 rng(23 + l);
      for (int it = 0; it < 10; ++it) {
        GMat g = random_gamma(F, rng, 3);
        auto m = [&] {
          Eigen::Matrix<RatFunc, 2, 2> r;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
              std::vector<RatFunc> cc;
              for (int k = 0; k <= g(i, j).deg(); ++k)
                cc.push_back(RatFunc(g(i, j).coeff(size_t(k))));
              r(i, j) = RatPoly(cc).eval(RatFunc::variable(0, F));
            }
          return r;
        }();
        MatR lhs = MatR(rho_star<RatFunc>(m, int(l), p) * (*M));
        MatR rhs = MatR((*M) * digits.apply(g));
        CHECK(mat_eq<RatFunc>(lhs, rhs));
      }
    }
  }
}

TEST_CASE("rho_sigma block structure and normal depth") {
  const FqCtx* F = fq_context_q(3);
  RatFunc t = RatFunc::variable(0, F);
  AlgebraRep sigma = companion_sigma(RatPoly({RatFunc() - t, RatFunc(), RatFunc(1)}), F);
  GammaRep rho = rep_rho_sigma(sigma);
  // rho((0 1; 1 0)) = (0 I; I 0)
  GMat w = gmat(APoly(), APoly::one(F), APoly::one(F), APoly());
  MatR img = rho.apply(w);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(img(i, j).is_zero());
      CHECK(img(i, 2 + j) == (i == j ? RatFunc(1) : RatFunc()));
      CHECK(img(2 + i, j) == (i == j ? RatFunc(1) : RatFunc()));
    }
  // identity and homomorphism
  std::mt19937_64 rng(29);
  CHECK(homomorphism_check(rho, rng, 15, 3));
  // normal to depth d
  CHECK(normal_depth_check(rho, 2, h_sample(F)));
  // rho^II is normal to depth 1
  GammaRep r2 = rep_tensor_II(F, {1, 2});
  CHECK(normal_depth_check(r2, 1, h_sample(F)));
  CHECK(r2.dim == 6);
  // depth-N normality implies finite image: the trivial rep as an example
  GammaRep triv = rep_tensor_II(F, {});
  CHECK(normal_depth_check(triv, 1, h_sample(F)));
}

TEST_CASE("det twist") {
  const FqCtx* F = fq_context_q(3);
  GammaRep taut = rep_tautological(F);
  // m = 0 leaves the representation unchanged
  GammaRep tw0 = det_twist(taut, 0);
  std::mt19937_64 rng(31);
  GMat g = random_gamma(F, rng, 2);
  CHECK(mat_eq<RatFunc>(tw0.apply(g), taut.apply(g)));
  // at gamma = diag(u, 1): matrix u^{-m} gamma
  GammaRep tw1 = det_twist(taut, 1);
  FqElem u = multiplicative_generator(F);
  GMat du = gmat(APoly(u), APoly(), APoly(), APoly::one(F));
  MatR expect = taut.apply(du);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) expect(i, j) = u.inverse() * expect(i, j);
  CHECK(mat_eq<RatFunc>(tw1.apply(du), expect));
  // twisting is a homomorphism
  CHECK(homomorphism_check(tw1, rng, 10, 2));
}

TEST_CASE("phi_p, the concatenation sequence, and S_(p)") {
  CHECK(phi_p(3, 2) == 4);
  for (uint32_t p : {2u, 3u, 5u}) {
    size_t count = 1;
    for (int i = 0; i < 5; ++i) count *= p;
    auto seq = digit_sequence(p, count);
    for (size_t l = 0; l < count; ++l) CHECK(seq[l] == phi_p(l, p));
    CHECK(phi_p(1 + p, p) == 4);
  }
  // a_2 for p=2 is (1,2,2,4)
  auto a2 = digit_sequence(2, 4);
  CHECK(a2 == std::vector<uint64_t>{1, 2, 2, 4});
  // S_(p): swap of the first two digits of l = 1 + 2p (p = 3): l' = 2 + p
  CHECK(sp_action({1, 0}, 1 + 2 * 3, 3) == 2 + 3);
  // identity permutation
  CHECK(sp_action({0, 1, 2}, 7, 2) == 7);
  // dimensions are S_(p)-invariant
  for (uint64_t l : {5ull, 11ull, 21ull}) {
    CHECK(phi_p(sp_action({2, 0, 1}, l, 3), 3) == phi_p(l, 3));
  }
}

TEST_CASE("carry-free exponents and the evaluation identity") {
  // q = p = 2, l = (1,1): k = (0,1), l_total = 3
  const FqCtx* F2 = fq_context_q(2);
  auto cf = carry_free_exponents({1, 1}, F2);
  CHECK(cf.k == std::vector<int>{0, 1});
  CHECK(cf.l_total == 3);
  // s = 1 is trivial
  auto cf1 = carry_free_exponents({5}, F2);
  CHECK(cf1.k == std::vector<int>{0});
  CHECK(cf1.l_total == 5);
  // q = p = 3, l = (2,2): k = (0,1), l_total = 8
  const FqCtx* F3 = fq_context_q(3);
  auto cf3 = carry_free_exponents({2, 2}, F3);
  CHECK(cf3.k == std::vector<int>{0, 1});
  CHECK(cf3.l_total == 8);

  // evaluation identity: substituting t_i -> t^{q^{k_i}} maps rho^II onto
  // rho^I_{l_total} up to the computed basis permutation
  for (auto& [F, ls] : std::vector<std::pair<const FqCtx*, std::vector<uint64_t>>>{
           {F2, {1, 1}}, {F2, {5, 1}}, {F3, {1, 2}}}) {
    auto c = carry_free_exponents(ls, F);
    GammaRep r2 = rep_tensor_II(F, ls);
    GammaRep r1 = rep_digits(F, c.l_total);
    REQUIRE(r1.dim == r2.dim);
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
      GMat g = random_gamma(F, rng, 3);
      MatR lhs = substitute_carry_free(r2.apply(g), c, F);
      MatR rhs = r1.apply(g);
      bool same = true;
      for (int i = 0; i < r1.dim && same; ++i)
        for (int j = 0; j < r1.dim && same; ++j)
          if (rhs(i, j) != lhs(c.perm[size_t(i)], c.perm[size_t(j)])) same = false;
      CHECK(same);
    }
  }
}

TEST_CASE("ev_zeta closures") {
  const FqCtx* F2 = fq_context_q(2);
  // q' = 2: |SL_2(F_2)| = 6
  {
    std::vector<MatF> gens;
    FqElem one = FqElem::one(F2);
    for (const auto& g : gamma_sample(F2, 1)) {
      if (!gmat_det(g).is_one()) continue;
      gens.push_back(MatF(mat_cast<FqElem>(MatF(ev_zeta(g, one)))));
    }
    CHECK(group_closure_order(gens) == 6);
  }
  // q' = 3
  {
    const FqCtx* F3 = fq_context_q(3);
    std::vector<MatF> gens;
    FqElem one = FqElem::one(F3);
    for (const auto& g : gamma_sample(F3, 1)) {
      if (!gmat_det(g).is_one()) continue;
      gens.push_back(MatF(mat_cast<FqElem>(MatF(ev_zeta(g, one)))));
    }
    CHECK(group_closure_order(gens) == 24);
  }
  // zeta generating F_4 over F_2: image has order |SL_2(F_4)| = 60
  {
    const FqCtx* F4 = fq_context_q(4);
    FqElem zeta = FqElem::gen(F4);
    std::vector<MatF> gens;
    for (const auto& g : gamma_sample(F2, 2)) {
      if (!gmat_det(g).is_one()) continue;
      gens.push_back(MatF(ev_zeta(g, zeta)));
    }
    CHECK(group_closure_order(gens) == 60);
  }
}

TEST_CASE("generic irreducibility by specialization") {
  const FqCtx* F2 = fq_context_q(2);
  for (uint64_t l : {1ull, 2ull, 3ull}) {
    auto r = generic_irreducible(rep_digits(F2, l), 3);
    CHECK(r.verdict == Verdict::Irreducible);
  }
  // rho^II q=2 l=(1,1)
  CHECK(generic_irreducible(rep_tensor_II(F2, {1, 1}), 5).verdict == Verdict::Irreducible);
  // rho^II q=3 l=(1,2)
  const FqCtx* F3 = fq_context_q(3);
  CHECK(generic_irreducible(rep_tensor_II(F3, {1, 2}), 5).verdict == Verdict::Irreducible);
  // det twists preserve the verdict
  CHECK(generic_irreducible(det_twist(rep_digits(F2, 3), 1), 7).verdict == Verdict::Irreducible);
  // rho_sigma with reducible sigma: certificate
  RatFunc t = RatFunc::variable(0, F3);
  AlgebraRep red = companion_sigma(RatPoly({RatFunc() - t * t, RatFunc(), RatFunc(1)}), F3);
  auto r = generic_irreducible(rep_rho_sigma(red), 11);
  CHECK(r.verdict == Verdict::Reducible);
  CHECK(r.certificate.cols() > 0);
  CHECK(r.certificate.cols() < 4);
  // and irreducible sigma gives an irreducible rho_sigma
  AlgebraRep irr = companion_sigma(RatPoly({RatFunc() - t, RatFunc(), RatFunc(1)}), F3);
  CHECK(generic_irreducible(rep_rho_sigma(irr), 11).verdict == Verdict::Irreducible);
}
