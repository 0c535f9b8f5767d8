#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffrep/gammarep.hpp"
#include "ffrep/meataxe.hpp"

using namespace ffrep;

namespace {

// generators of SL_2(F_{q'}): elementary matrices over an F_p-basis
std::vector<MatF> sl2_gens(const FqCtx* E) {
  std::vector<MatF> out;
  for (uint32_t i = 0; i < E->e; ++i) {
    FqElem x = (i == 0) ? FqElem::one(E) : FqElem::gen(E).pow(i);
    MatF a(2, 2), b(2, 2);
    a.setZero(); b.setZero();
    a(0, 0) = a(1, 1) = FqElem::one(E);
    b(0, 0) = b(1, 1) = FqElem::one(E);
    a(0, 1) = x;
    b(1, 0) = x;
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

// full symmetric power of the restriction to SL_2(F_{q'})
std::vector<MatF> sym_gens(const FqCtx* E, int l) {
  std::vector<MatF> out;
  for (const auto& g : sl2_gens(E)) {
    Eigen::Matrix<FqElem, 2, 2> m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = g(i, j);
    out.push_back(sym_power<FqElem>(m, l));
  }
  return out;
}

// Sym^l over F_{q'} is irreducible iff the digit tensor factors collide on no
// Frobenius class mod f and nothing was dropped (phi_p(l) = l+1)
bool sym_irreducible_expected(uint64_t q, int l) {
  const FqCtx* E = fq_context_q(q);
  uint32_t p = E->p, f = E->e;
  if (phi_p(uint64_t(l), p) != uint64_t(l) + 1) return false;
  auto digits = digits_base_p(uint64_t(l), p);
  std::vector<int> cls(f, 0);
  for (size_t i = 0; i < digits.size(); ++i)
    if (digits[i]) ++cls[i % f];
  for (int c : cls)
    if (c > 1) return false;
  return true;
}

}  // namespace

TEST_CASE("1-dimensional representations are irreducible") {
  const FqCtx* F = fq_context_q(3);
  MatF one(1, 1);
  one(0, 0) = FqElem::one(F);
  auto r = meataxe_irreducible({one}, 1);
  CHECK(r.verdict == Verdict::Irreducible);
}

TEST_CASE("symmetric-power boundary over prime fields: irreducible iff l < q'") {
  for (uint64_t qp : {2ull, 3ull, 5ull}) {
    const FqCtx* E = fq_context_q(qp);
    for (int l = 0; l <= int(qp) + 2; ++l) {
      auto gens = sym_gens(E, l);
      auto r = meataxe_irreducible(gens, 17 + uint64_t(l));
      bool expect_irr = l < int(qp);
      CHECK(r.verdict == (expect_irr ? Verdict::Irreducible : Verdict::Reducible));
      if (r.verdict == Verdict::Reducible) {
        CHECK(r.invariant.cols() > 0);
        CHECK(r.invariant.cols() < l + 1);
        CHECK(is_invariant_subspace(r.invariant, gens));
      }
    }
  }
}

TEST_CASE("symmetric powers over F_4 follow the twist-collision rule") {
  // the prime-field boundary formula l < q' fails at l = 2 over F_4, where
  // Sym^2 has the invariant plane spanned by X^2, Y^2
  for (int l = 0; l <= 6; ++l) {
    auto gens = sym_gens(fq_context_q(4), l);
    auto r = meataxe_irreducible(gens, 29 + uint64_t(l));
    CHECK(r.verdict == (sym_irreducible_expected(4, l) ? Verdict::Irreducible : Verdict::Reducible));
    if (r.verdict == Verdict::Reducible) CHECK(is_invariant_subspace(r.invariant, gens));
  }
  CHECK(!sym_irreducible_expected(4, 2));
  CHECK(sym_irreducible_expected(4, 3));
  CHECK(!sym_irreducible_expected(4, 4));
}

TEST_CASE("digit representations evaluated at a generator are irreducible below q'") {
  // rho^I_l over F_4 via theta -> zeta: l = 3 irreducible, l = 4 and 6 reduce
  // to twisted tautological pieces under entry wrapping; the meataxe sees the
  // matrix group, so expectations follow the twist classes of the digits
  const FqCtx* F2 = fq_context_q(2);
  const FqCtx* F4 = fq_context_q(4);
  FqElem zeta = FqElem::gen(F4);
  for (uint64_t l : {1ull, 2ull, 3ull, 5ull}) {
    GammaRep rep = rep_digits(F2, l);
    std::vector<MatF> gens;
    for (const auto& g : gamma_sample(F2, 2)) {
      if (!gmat_det(g).is_one()) continue;
      MatR img = rep.apply(g);
      std::vector<FqElem> pt(kMaxVars, FqElem::zero(F4));
      pt[0] = zeta;
      MatF m(rep.dim, rep.dim);
      for (int i = 0; i < rep.dim; ++i)
        for (int j = 0; j < rep.dim; ++j) m(i, j) = embed_eval(img(i, j), pt, F4);
      gens.push_back(m);
    }
    auto r = meataxe_irreducible(gens, 31 + l);
    // digits of l in base 2 occupy distinct classes mod 2 for l = 1,2,3; for
    // l = 5 = 1 + 4 both digits land in class 0 and the product reduces
    bool expect_irr = (l != 5);
    CHECK(r.verdict == (expect_irr ? Verdict::Irreducible : Verdict::Reducible));
  }
}
