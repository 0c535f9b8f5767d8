#pragma once

// Algebra representations sigma: A -> Mat_{d x d}(K_s), determined by the
// image of theta; companion construction, faithfulness and irreducibility.

#include <optional>
#include <string>

#include "ffrep/ratpoly.hpp"

namespace ffrep {

struct AlgebraRep {
  int d = 1;
  const FqCtx* F = nullptr;
  MatR theta;              // sigma(theta)
  std::string provenance;  // free-form construction tag

  static AlgebraRep from_theta(const FqCtx* F, const MatR& th, std::string tag = "");
  // chi_t: the 1x1 representation theta -> t_var
  static AlgebraRep chi_t(const FqCtx* F, int var = 0);
};

// sigma(a) = a(theta-image); an algebra homomorphism by construction
MatR sigma_eval(const AlgebraRep& rep, const APoly& a);

// sigma_P(theta) is the companion matrix of the monic P
AlgebraRep companion_sigma(const RatPoly& P, const FqCtx* F);

RatPoly charpoly(const AlgebraRep& rep);
RatPoly minpoly(const AlgebraRep& rep);

struct FaithfulResult {
  bool faithful = false;
  // factor of the characteristic polynomial whose roots avoid the algebraic
  // closure of F_q (nontrivial exactly when faithful)
  RatPoly witness;
  // the complementary part, all roots inside F_q^{ac}
  RatPoly bounded_part;
};
// exact for any s: divides out, per degree k <= d, every factor sharing
// roots with x^{q^k} - x
FaithfulResult is_faithful(const AlgebraRep& rep);

enum class Verdict { Irreducible, Reducible, Unknown };

struct IrredResult {
  Verdict verdict = Verdict::Unknown;
  RatPoly factor;      // a proper factor when Reducible (if known)
  std::string detail;
};

// irreducibility of charpoly over K_s; exact for s == 0 (any degree) and for
// s == 1 up to degree 3 (root search on the cleared bivariate form); sound
// one-sided specialization otherwise
IrredResult is_irreducible_sigma(const AlgebraRep& rep, uint64_t seed = 1);

// roots of f in K_s for s <= 1 (rational root search); exact
std::vector<RatFunc> rational_roots(const RatPoly& f, const FqCtx* F, uint64_t seed = 1);

}  // namespace ffrep
