#pragma once

// Coset enumeration for H\Gamma, Moebius action on points of the Drinfeld
// upper half-plane (restricted to the ramified slice F_q((theta^{-1/2}))),
// truncated vectorial Poincare/Eisenstein series, and the numeric
// certification suite: functional equation, exact vanishing, rank and
// independence, the u -> 0 limit, G = L*E, and the specialization identity.

#include "ffrep/gammarep.hpp"

namespace ffrep {

struct OmegaPoint {
  TruncSeries z;  // ram = 2, nonzero odd part within precision
  static OmegaPoint make(const TruncSeries& z) {
    if (z.ram() != 2) {
      OmegaPoint p{z.promoted(2)};
      if (!p.z.odd_part_nonzero()) throw PointOnBoundary("point has no odd part");
      return p;
    }
    if (!z.odd_part_nonzero()) throw PointOnBoundary("point has no odd part");
    return OmegaPoint{z};
  }
  // |z|_Im = inf_{lambda in K_inf} |z - lambda| is the norm of the odd part
  Val im_valuation() const { return z.odd_part().valuation(); }
};

// theta^{k/2} and simple shifted points
OmegaPoint point_theta_half(const FqCtx* F, int odd_power_numerator);

struct CosetRep {
  APoly c, d;  // coprime bottom row (gcd a unit)
  APoly a, b;  // canonical completion with ad - bc = 1, deg a < deg c for c != 0
  GMat to_gmat() const { return gmat(a, b, c, d); }
};

// all unit-gcd pairs with max(deg c, deg d) <= D, grouped by max degree
// ascending, deterministic order; fn(CosetRep, max_degree)
void coset_enum(const FqCtx* F, int D, const std::function<void(const CosetRep&, int)>& fn);
uint64_t coset_count(const FqCtx* F, int D);

// gamma(z) = (az+b)/(cz+d) and J_gamma(z) = cz+d
std::pair<TruncSeries, TruncSeries> mobius_and_factor(const GMat& g, const TruncSeries& z);

struct SeriesEvalReport {
  MatS value;                // L x N (or the G-series block) over ram-2 series
  int cutoff = 0;
  std::vector<Val> deltas;   // valuation of each degree slice (diagnostic)
  Val tail_bound;            // injected guaranteed precision
  bool vanishing_class = false;
};

// truncated E_{w,m,rho}(z) = sum_{cosets} det^m J^{-w} u^m(delta z) rho(delta)_L
SeriesEvalReport eisenstein_E(const GammaRep& rep, int w, int m, const OmegaPoint& z, int D,
                              const Precision& prec);

// truncated G_{w,sigma}(z) = sum'_{(a,b)} (az+b)^{-w} (x) (sigma_i(a), sigma_i(b))
SeriesEvalReport eisenstein_G(const std::vector<AlgebraRep>& factors, int w, const OmegaPoint& z,
                              int D, const Precision& prec);

struct ResidualCheck {
  bool pass = false;
  Val residual;
  Val window;
  std::string note;
};

// G_{w,sigma} = L_sigma(w) E_{w,0,rho} with rho the tensor of the rho_sigma_i
ResidualCheck check_G_eq_LE(const std::vector<AlgebraRep>& factors, int w, const OmegaPoint& z,
                            int D, const Precision& prec);

// E(gamma z) = det(gamma)^{-m} J_gamma(z)^w E(z) rho(gamma)^{-1}: residual
// valuations at the listed cutoffs (a convergence diagnostic; the two sides
// truncate over different coset sets)
struct FunctionalEqReport {
  std::vector<Val> residuals;
  std::vector<bool> zero_to_window;  // difference vanished within its window
  bool strictly_improving = false;
  bool exact = false;  // the last cutoff's difference vanished to precision
};
FunctionalEqReport functional_eq_check(const GammaRep& rep, int w, int m, const OmegaPoint& z,
                                       const GMat& gamma, const std::vector<int>& cutoffs,
                                       const Precision& prec);

// truncated sums are exactly zero at every cutoff when w != 2m + c mod (q-1)
bool vanishing_class(const GammaRep& rep, int w, int m);
bool exact_vanishing_check(const GammaRep& rep, int w, int m, int D, const Precision& prec);

struct RankReport {
  int certified_rank = 0;
  bool row_entries_independent = false;
  Val minor_valuation;
  Val minor_window;
  std::string note;
};
// stacks evaluations at the points; a minor that is nonzero within its
// guaranteed window certifies the rank bound / independence
RankReport rank_and_independence(const GammaRep& rep, int w, int m,
                                 const std::vector<OmegaPoint>& points, int D,
                                 const Precision& prec);

struct ULimitReport {
  bool pass = false;
  // kappa = sum_{u in F_q^x} u^{2m-w+c}: the identity-orbit factor
  bool leading_block_identity = false;
  Val rest_valuation;   // everything beyond the identity-orbit contribution
  std::string note;
};
// at z with large |z|_Im, E_{w,0,rho} = kappa (0,...,0,I_L) + higher terms
ULimitReport ulimit_check(const GammaRep& rep, int w, const OmegaPoint& z, int D,
                          const Precision& prec);

// (E_{w,m,rho} F_l)|_{t_i -> theta} = P_{w',m} with w' = w - sum l_i,
// termwise over cosets, so the truncations agree exactly
ResidualCheck poincare_specialize_check(const FqCtx* F, const std::vector<uint64_t>& ls, int w,
                                        int m, const OmegaPoint& z, int D, const Precision& prec);

// binomial-weighted symmetric power vector of F(z) = (z, 1) with twists,
// matching the digit-major tensor order of rep_tensor_II
std::vector<TruncSeries> f_vector(const FqCtx* F, const std::vector<uint64_t>& ls,
                                  const TruncSeries& z);

}  // namespace ffrep
