#pragma once

// The Carlitz module: factorials D_i, twisted-polynomial action C_a, the
// exponential exp_C on scalars and matrices, the A-lattice exponential e_A
// and the uniformizer u(z) = 1/e_A(z).

#include "ffrep/linalg.hpp"

namespace ffrep {

// D_0 = 1, D_i = (theta^{q^i} - theta) D_{i-1}^q; equals the product of all
// monic polynomials of degree i.
APoly carlitz_factorial(const FqCtx* F, int i);

// truncated polynomials in tau with matrix coefficients acting on matrices
// over K_{s,infinity}(lambda): (c tau^i)(m) = c * tau^i(m)
struct TwistedPoly {
  uint64_t q = 0;
  std::vector<MatL> coeff;  // coefficient of tau^i

  MatL apply(const MatL& m) const;
  TwistedPoly compose(const TwistedPoly& other) const;  // (this ∘ other)

  // C_theta = theta tau^0 + tau^1 acting on d x d matrices
  static TwistedPoly c_theta(const FqCtx* F, int d);
  // C_a: substitute C_theta for theta, F_q-linearly in the coefficients of a
  static TwistedPoly c_poly(const APoly& a, int d);
};

MatL tau_mat(const MatL& m, uint64_t q, int iterations = 1);
MatS tau_mat(const MatS& m, uint64_t q, int iterations = 1);

// C_a(m) by Horner composition in the theta-digits of a
MatL carlitz_action(const APoly& a, const MatL& m, uint64_t q);

// exp_C(f) = sum_i D_i^{-1} tau^i(f); adaptive truncation monitors term
// valuations against target+guard, stopping once the tail is provably above
// the window (v(D_i^{-1} tau^i f) = q^i (v(f) + i) is eventually increasing).
MatL exp_carlitz(const MatL& f, uint64_t q, const Precision& prec);
TruncSeries exp_carlitz_scalar(const TruncSeries& f, uint64_t q, const Precision& prec);

// the A-lattice exponential e_A(z) = pitilde^{-1} exp_C(pitilde z); its
// series coefficients pitilde^{q^i - 1}/D_i lie in K_infinity
TruncSeries e_lattice(const TruncSeries& z, uint64_t q, const Precision& prec);
// u(z) = 1/e_A(z); requires z with a nonzero odd part (z not in K_infinity)
TruncSeries u_eval(const TruncSeries& z, uint64_t q, const Precision& prec);

}  // namespace ffrep
