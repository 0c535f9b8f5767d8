#pragma once

// Semi-characters, conductors, truncated L-values, omega-values, and the
// identity suite: tau-difference equation, exp_C formula, determinant lemma,
// the n = 1 series identity, the Taelman matrix S_sigma, and the s = 1
// explicit formula.

#include "ffrep/algrep.hpp"
#include "ffrep/carlitz.hpp"

namespace ffrep {

struct SemiCharacter {
  const FqCtx* F = nullptr;
  int d = 1;
  std::vector<AlgebraRep> factors;  // pairwise commuting theta-images

  // throws if the theta-images do not pairwise commute
  static SemiCharacter make(const FqCtx* F, int d, std::vector<AlgebraRep> factors);
  int s() const { return int(factors.size()); }
  // sigma(a) = sigma_1(a) ... sigma_s(a); the empty product is I_d
  MatR eval(const APoly& a) const;
};

// product of the pairwise distinct minimal polynomials of the theta-images
RatPoly conductor(const SemiCharacter& sc);

// lift sigma_1, ..., sigma_s to commuting factors I (x) ... sigma_i ... (x) I
// acting in dimension d^s (the semi-character of the G-series factorization)
SemiCharacter tensor_lift(const FqCtx* F, const std::vector<AlgebraRep>& factors);

// truncated Dirichlet sum  sum_{a monic, deg a <= D} sigma(a) a^{-n};
// the guaranteed precision is capped by the tail bound n(D+1)
MatS L_value(const SemiCharacter& sc, int n, int D);

// truncated Euler product over monic irreducibles of degree <= D
MatS euler_product(const SemiCharacter& sc, int n, int D);

// Pellarin-type scalar L-series sum_a a(x_1)...a(x_s) a^{-n}, deg a <= D,
// with x_i placed on RatFunc variables first_var, ..., first_var + s - 1
TruncSeries pellarin_L(const FqCtx* F, int s, int n, int D, int first_var = 0);

// omega_sigma = lambda * prod_{i >= 0} (I - theta_image theta^{-q^i})^{-1}
MatL omega_value(const AlgebraRep& rep);

struct ResidualReport {
  bool pass = false;        // residual vanishes within its guaranteed window
  Val residual;             // lower bound for v(residual)
  Val window;               // guaranteed precision of the residual
  std::string note;
};

// v(tau(omega) - (theta_image - theta I) omega)
ResidualReport check_tau_equation(const AlgebraRep& rep, const MatL& omega);
// v(omega - exp_C(pitilde (theta I - theta_image)^{-1}))
ResidualReport check_exp_formula(const AlgebraRep& rep, const Precision& prec);
// sum_a a^{-1} C_a(omega_1)...C_a(omega_s) vs L_sigma(1) omega_1...omega_s
ResidualReport series_identity_s(const SemiCharacter& sc, int D, const Precision& prec);
// v(L_sigma(1) - omega^{-1}(theta I - theta_image)^{-1} pitilde), s = 1
ResidualReport L1_explicit_check(const AlgebraRep& rep, int D, const Precision& prec);

struct TaelmanReport {
  MatL S;
  bool S_polynomial = false;   // zero lambda-components and no negative tail
  bool S_is_identity = false;
  bool S_is_zero = false;
  bool B_polynomial = false;   // only meaningful when s = 1 mod (q-1), s > 1
  Val window;
  std::string note;
};
// S_sigma = (omega_1...omega_s)^{-1} exp_C(omega_1...omega_s L_sigma(1))
TaelmanReport taelman_S(const SemiCharacter& sc, int D, const Precision& prec);

struct DetLemmaReport {
  bool pass = false;
  Val residual;
  Val window;
};
// determinant lemma on the solvable commuting family with explicit
// eigenvalues: factors theta_1 = companion(x^2 - u_1^2), theta_i = u_i theta_1
DetLemmaReport det_L_check(const FqCtx* F, int s, int n, int D);

// scalar-to-matrix helpers shared with the modular forms layer
MatL lambda_mat(const MatR& m, int ram = 1);
MatL lambda_mat(const MatS& m);
MatS series_mat(const MatR& m, int ram = 1);
MatL scalar_mul(const LambdaElem& s, const MatL& m);
MatS scalar_mul(const TruncSeries& s, const MatS& m);

}  // namespace ffrep
