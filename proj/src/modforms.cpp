#include "ffrep/modforms.hpp"

#include "ffrep/carlitz.hpp"

namespace ffrep {

OmegaPoint point_theta_half(const FqCtx* F, int odd_power_numerator) {
  if (odd_power_numerator % 2 == 0) throw PointOnBoundary("even power lies in K_infinity");
  return OmegaPoint::make(TruncSeries::monomial(2, -odd_power_numerator, RatFunc(FqElem::one(F))));
}

void coset_enum(const FqCtx* F, int D, const std::function<void(const CosetRep&, int)>& fn) {
  const uint64_t q = F->q;
  for (int k = 0; k <= D; ++k) {
    uint64_t lim = 1;
    for (int i = 0; i <= k; ++i) lim *= q;
    uint64_t lower = lim / q;  // indices below this have degree < k
    for (uint64_t ic = 0; ic < lim; ++ic) {
      for (uint64_t id = 0; id < lim; ++id) {
        if (k > 0 && ic < lower && id < lower) continue;  // max degree < k
        APoly c = APoly::from_index(F, ic);
        APoly d = APoly::from_index(F, id);
        if (c.is_zero() && d.is_zero()) continue;
        APoly g = gcd(c, d);
        if (g.deg() != 0) continue;
        CosetRep rep;
        rep.c = c;
        rep.d = d;
        if (c.is_zero()) {
          // d is a unit constant
          rep.a = APoly(d.coeff(0).inverse());
          rep.b = APoly();
        } else {
          APoly x, y;
          APoly gg = gcd_ext(c, d, x, y);  // gg = 1 = xc + yd
          rep.a = y;
          rep.b = APoly() - x;
          // normalize deg a < deg c, preserving ad - bc = 1
          APoly e, r;
          APoly::divmod(rep.a, c, e, r);
          rep.a = r;
          rep.b = rep.b - e * d;
        }
        fn(rep, k);
      }
    }
  }
}

uint64_t coset_count(const FqCtx* F, int D) {
  uint64_t n = 0;
  coset_enum(F, D, [&](const CosetRep&, int) { ++n; });
  return n;
}

std::pair<TruncSeries, TruncSeries> mobius_and_factor(const GMat& g, const TruncSeries& z) {
  auto poly_times = [&](const APoly& p) {
    // p(theta) * z as an exact shift combination
    TruncSeries acc = TruncSeries::zero_exact();
    for (int i = 0; i <= p.deg(); ++i) {
      FqElem c = p.coeff(size_t(i));
      if (c.is_zero()) continue;
      acc += RatFunc(c) * z.shifted(-(long long)i * z.ram());
    }
    return acc;
  };
  TruncSeries jz = poly_times(g(1, 0)) + TruncSeries::from_apoly(g(1, 1), z.ram());
  if (jz.is_zero_to_prec()) throw InsufficientPrecision("J_gamma(z) vanishes to precision");
  TruncSeries num = poly_times(g(0, 0)) + TruncSeries::from_apoly(g(0, 1), z.ram());
  return {num * jz.inverse(), jz};
}

bool vanishing_class(const GammaRep& rep, int w, int m) {
  long long qm1 = (long long)rep.F->q - 1;
  long long r = ((2 * (long long)m - (long long)w + rep.central_exp) % qm1 + qm1) % qm1;
  return r != 0;
}

namespace {

Val tail_bound_E(int w, const OmegaPoint& z, int D) {
  // missing cosets have max(deg c, deg d) >= D+1; v(J^{-w}) >= w (D+1 - max(0, v(z)))
  Val vz = z.z.valuation();
  Val shift = Val::of(0, 1);
  if (Val::of(0, 1) < vz && !vz.inf) shift = vz;
  return Val::of((long long)w * ((long long)(D + 1) * shift.den - shift.num), shift.den);
}

void accumulate_scaled(MatS& acc, const TruncSeries& scalar, const MatR& mat) {
  for (Eigen::Index i = 0; i < acc.rows(); ++i)
    for (Eigen::Index j = 0; j < acc.cols(); ++j)
      if (!mat(i, j).is_zero()) acc(i, j) += mat(i, j) * scalar;
}

void truncate_mat(MatS& m, const Val& bound) {
  if (bound.inf) return;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      long long units = (bound.num * m(i, j).ram()) / bound.den;
      m(i, j) = m(i, j).truncated(units);
    }
}

}  // namespace

SeriesEvalReport eisenstein_E(const GammaRep& rep, int w, int m, const OmegaPoint& z, int D,
                              const Precision& prec) {
  const FqCtx* F = rep.F;
  const int L = int(rep.depth_rows.size());
  const int N = rep.dim;
  SeriesEvalReport out;
  out.cutoff = D;
  out.vanishing_class = vanishing_class(rep, w, m);
  out.value = MatS(L, N);
  out.value.setZero();
  MatS degree_slice(L, N);
  degree_slice.setZero();
  int current_k = 0;
  auto flush_slice = [&](int k) {
    (void)k;
    Val v = mat_valuation(degree_slice);
    out.deltas.push_back(v);
    out.value = out.value + degree_slice;
    degree_slice.setZero();
  };
  coset_enum(F, D, [&](const CosetRep& cr, int k) {
    if (k != current_k) { flush_slice(current_k); current_k = k; }
    GMat g = cr.to_gmat();
    auto [gz, jz] = mobius_and_factor(g, z.z);
    TruncSeries scalar = jz.inverse().pow(w);
    if (m != 0) {
      TruncSeries u = u_eval(gz, F->q, prec);
      scalar = scalar * u.pow(m);
      FqElem det = gmat_det(g).coeff(0);  // completions have det 1
      if (!det.is_one()) {
        RatFunc dm(det.pow(uint64_t(m)));
        scalar = dm * scalar;
      }
    }
    MatR img = rep.apply(g);
    MatR block(L, N);
    for (int r = 0; r < L; ++r) block.row(r) = img.row(rep.depth_rows[size_t(r)]);
    accumulate_scaled(degree_slice, scalar, block);
  });
  flush_slice(current_k);
  out.tail_bound = tail_bound_E(w, z, D);
  truncate_mat(out.value, out.tail_bound);
  return out;
}

SeriesEvalReport eisenstein_G(const std::vector<AlgebraRep>& factors, int w, const OmegaPoint& z,
                              int D, const Precision& prec) {
  (void)prec;
  const FqCtx* F = factors.empty() ? nullptr : factors[0].F;
  if (!F) throw Error("eisenstein_G needs at least one factor");
  const int d = factors[0].d;
  int rows = 1, cols = 1;
  for (size_t i = 0; i < factors.size(); ++i) { rows *= d; cols *= 2 * d; }
  SeriesEvalReport out;
  out.cutoff = D;
  out.value = MatS(rows, cols);
  out.value.setZero();
  const uint64_t q = F->q;
  uint64_t lim = 1;
  for (int i = 0; i <= D; ++i) lim *= q;
  for (uint64_t ia = 0; ia < lim; ++ia) {
    APoly a = APoly::from_index(F, ia);
    std::vector<MatR> sa;
    for (const auto& f : factors) sa.push_back(sigma_eval(f, a));
    for (uint64_t ib = 0; ib < lim; ++ib) {
      if (ia == 0 && ib == 0) continue;
      APoly b = APoly::from_index(F, ib);
      // az + b and its -w power
      TruncSeries azb = TruncSeries::zero_exact();
      for (int i = 0; i <= a.deg(); ++i) {
        FqElem c = a.coeff(size_t(i));
        if (!c.is_zero()) azb += RatFunc(c) * z.z.shifted(-(long long)i * z.z.ram());
      }
      azb += TruncSeries::from_apoly(b, z.z.ram());
      TruncSeries scalar = azb.inverse().pow(w);
      // (sigma_1(a), sigma_1(b)) (x) ... (x) (sigma_s(a), sigma_s(b))
      MatR row = MatR::Identity(1, 1);
      for (size_t i = 0; i < factors.size(); ++i) {
        MatR sb = sigma_eval(factors[i], b);
        MatR pair(d, 2 * d);
        pair.block(0, 0, d, d) = sa[i];
        pair.block(0, d, d, d) = sb;
        row = kron<RatFunc>(row, pair);
      }
      accumulate_scaled(out.value, scalar, row);
    }
  }
  out.tail_bound = tail_bound_E(w, z, D);
  truncate_mat(out.value, out.tail_bound);
  return out;
}

ResidualCheck check_G_eq_LE(const std::vector<AlgebraRep>& factors, int w, const OmegaPoint& z,
                            int D, const Precision& prec) {
  const FqCtx* F = factors[0].F;
  SeriesEvalReport G = eisenstein_G(factors, w, z, D, prec);
  GammaRep rho = rep_rho_sigma(factors[0]);
  for (size_t i = 1; i < factors.size(); ++i) rho = rep_tensor(rho, rep_rho_sigma(factors[i]));
  SeriesEvalReport E = eisenstein_E(rho, w, 0, z, D, prec);
  SemiCharacter lifted = tensor_lift(F, factors);
  MatS L = L_value(lifted, w, D);
  // promote L to the ramified grid and multiply
  MatS L2(L.rows(), L.cols());
  for (Eigen::Index i = 0; i < L.rows(); ++i)
    for (Eigen::Index j = 0; j < L.cols(); ++j) L2(i, j) = L(i, j).promoted(2);
  MatS rhs = L2 * E.value;
  MatS diff = G.value - rhs;
  Val bound = tail_bound_E(w, z, D);
  truncate_mat(diff, bound);
  ResidualCheck rc;
  rc.residual = mat_valuation(diff);
  rc.window = mat_prec(diff);
  rc.pass = mat_zero_to_prec(diff);
  rc.note = "G = L*E at cutoff " + std::to_string(D);
  return rc;
}

FunctionalEqReport functional_eq_check(const GammaRep& rep, int w, int m, const OmegaPoint& z,
                                       const GMat& gamma, const std::vector<int>& cutoffs,
                                       const Precision& prec) {
  FunctionalEqReport rep_out;
  auto [gz_series, jz] = mobius_and_factor(gamma, z.z);
  OmegaPoint gz = OmegaPoint::make(gz_series);
  MatR rho_inv = inverse_exact<RatFunc>(rep.apply(gamma));
  FqElem det = gmat_det(gamma).coeff(0);
  for (int D : cutoffs) {
    SeriesEvalReport lhs = eisenstein_E(rep, w, m, gz, D, prec);
    SeriesEvalReport rhs0 = eisenstein_E(rep, w, m, z, D, prec);
    // det^{-m} J^w E(z) rho(gamma)^{-1}
    MatS rhs(rhs0.value.rows(), rep.dim);
    rhs.setZero();
    TruncSeries jw = jz.pow(w);
    if (!det.is_one() && m != 0) jw = RatFunc(det.inverse().pow(uint64_t(m))) * jw;
    for (Eigen::Index i = 0; i < rhs.rows(); ++i)
      for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
        TruncSeries acc = TruncSeries::zero_exact();
        for (Eigen::Index k = 0; k < rhs.cols(); ++k)
          if (!rho_inv(k, j).is_zero()) acc += rho_inv(k, j) * rhs0.value(i, k);
        rhs(i, j) = acc * jw;
      }
    MatS diff = lhs.value - rhs;
    rep_out.residuals.push_back(mat_valuation(diff));
    rep_out.zero_to_window.push_back(mat_zero_to_prec(diff));
  }
  rep_out.strictly_improving = true;
  for (size_t i = 1; i < rep_out.residuals.size(); ++i)
    if (!(rep_out.residuals[i - 1] < rep_out.residuals[i])) rep_out.strictly_improving = false;
  if (!rep_out.zero_to_window.empty()) rep_out.exact = rep_out.zero_to_window.back();
  return rep_out;
}

bool exact_vanishing_check(const GammaRep& rep, int w, int m, int D, const Precision& prec) {
  if (!vanishing_class(rep, w, m)) return false;
  const FqCtx* F = rep.F;
  const int L = int(rep.depth_rows.size());
  MatS acc(L, rep.dim);
  acc.setZero();
  int current_k = 0;
  bool all_zero = true;
  auto check_slice = [&]() {
    for (Eigen::Index i = 0; i < acc.rows(); ++i)
      for (Eigen::Index j = 0; j < acc.cols(); ++j)
        if (!acc(i, j).is_zero_to_prec()) all_zero = false;
  };
  coset_enum(F, D, [&](const CosetRep& cr, int k) {
    if (k != current_k) { check_slice(); current_k = k; }
    GMat g = cr.to_gmat();
    auto [gz_s, jz] = mobius_and_factor(g, point_theta_half(F, 1).z);
    TruncSeries scalar = jz.inverse().pow(w);
    if (m != 0) scalar = scalar * u_eval(gz_s, F->q, prec).pow(m);
    MatR img = rep.apply(g);
    MatR block(L, rep.dim);
    for (int r = 0; r < L; ++r) block.row(r) = img.row(rep.depth_rows[size_t(r)]);
    accumulate_scaled(acc, scalar, block);
  });
  check_slice();
  return all_zero;
}

RankReport rank_and_independence(const GammaRep& rep, int w, int m,
                                 const std::vector<OmegaPoint>& points, int D,
                                 const Precision& prec) {
  RankReport out;
  const int L = int(rep.depth_rows.size());
  const int N = rep.dim;
  MatS stacked(int(points.size()) * L, N);
  // the rank of the matrix function is certified per evaluation point (rows
  // across different points are not rows of one value of the function)
  auto eliminate_rank = [&](MatS a, Val* window_out) {
    int rank = 0;
    Val min_window = Val::infinity();
    for (int step = 0; step < std::min<int>(int(a.rows()), N); ++step) {
      int pr = -1, pc = -1;
      Val best = Val::infinity();
      for (int i = rank; i < a.rows(); ++i)
        for (int j = 0; j < N; ++j) {
          if (a(i, j).is_zero_to_prec()) continue;
          Val v = a(i, j).valuation();
          if (v < best) { best = v; pr = i; pc = j; }
        }
      if (pr < 0) break;
      a.row(pr).swap(a.row(rank));
      if (min_window.inf || a(rank, pc).prec_val() < min_window) min_window = a(rank, pc).prec_val();
      TruncSeries inv = a(rank, pc).inverse();
      for (int i = rank + 1; i < a.rows(); ++i) {
        if (a(i, pc).is_zero_to_prec()) continue;
        TruncSeries f = a(i, pc) * inv;
        for (int j = 0; j < N; ++j) a(i, j) = a(i, j) - f * a(rank, j);
      }
      ++rank;
    }
    if (window_out) *window_out = min_window;
    return rank;
  };
  out.certified_rank = 0;
  for (size_t p = 0; p < points.size(); ++p) {
    SeriesEvalReport ev = eisenstein_E(rep, w, m, points[p], D, prec);
    stacked.block(int(p) * L, 0, L, N) = ev.value;
    Val window = Val::infinity();
    int r = eliminate_rank(ev.value, &window);
    if (r > out.certified_rank) {
      out.certified_rank = r;
      out.minor_window = window;
    }
  }
  out.minor_valuation = mat_valuation(stacked);
  // independence of the entries of the first depth row across the points
  MatS rows(int(points.size()), N);
  for (size_t p = 0; p < points.size(); ++p) rows.row(int(p)) = stacked.row(int(p) * L);
  if (int(points.size()) == N) {
    // direct determinant keeps the sharpest precision bound
    std::function<TruncSeries(const MatS&, std::vector<int>)> det_rec =
        [&](const MatS& m, std::vector<int> cols) -> TruncSeries {
      if (cols.size() == 1) return m(m.rows() - (Eigen::Index)1, cols[0]);
      Eigen::Index row = m.rows() - (Eigen::Index)cols.size();
      TruncSeries acc = TruncSeries::zero_exact();
      for (size_t k = 0; k < cols.size(); ++k) {
        const TruncSeries& e = m(row, cols[k]);
        if (e.is_exact_zero()) continue;
        std::vector<int> rest;
        for (size_t j = 0; j < cols.size(); ++j)
          if (j != k) rest.push_back(cols[j]);
        TruncSeries sub = det_rec(m, rest);
        TruncSeries term = e * sub;
        acc = (k % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    };
    std::vector<int> cols;
    for (int j = 0; j < N; ++j) cols.push_back(j);
    TruncSeries det = det_rec(rows, cols);
    out.row_entries_independent = !det.is_zero_to_prec();
  } else if (int(points.size()) > N) {
    int r2 = eliminate_rank(rows, nullptr);
    out.row_entries_independent = (r2 == N);
  }
  out.note = "rank from " + std::to_string(points.size()) + " points at cutoff " + std::to_string(D);
  return out;
}

ULimitReport ulimit_check(const GammaRep& rep, int w, const OmegaPoint& z, int D,
                          const Precision& prec) {
  ULimitReport out;
  const FqCtx* F = rep.F;
  SeriesEvalReport ev = eisenstein_E(rep, w, 0, z, D, prec);
  const int L = int(rep.depth_rows.size());
  // kappa = sum_{u} u^{c - w} in F_q
  FqElem kappa = FqElem::zero(F);
  for (uint64_t u = 1; u < F->q; ++u) {
    long long e = rep.central_exp - w;
    long long qm1 = (long long)F->q - 1;
    long long em = ((e % qm1) + qm1) % qm1;
    kappa += FqElem::from_index(F, u).pow(uint64_t(em));
  }
  // expected leading block: kappa * (0, ..., 0, I_L) on the depth columns
  MatS rest = ev.value;
  for (int r = 0; r < L; ++r) {
    int col = rep.depth_rows[size_t(r)];
    rest(r, col) = rest(r, col) - TruncSeries(RatFunc(kappa)).promoted(2);
  }
  out.rest_valuation = mat_valuation(rest);
  out.pass = Val::of(0, 1) < out.rest_valuation;
  out.leading_block_identity = kappa.is_one();
  out.note = "identity-orbit factor kappa = " + std::to_string(kappa.is_zero() ? 0 : 1) +
             (kappa.is_one() ? " (exactly the identity block)" : "");
  return out;
}

std::vector<TruncSeries> f_vector(const FqCtx* F, const std::vector<uint64_t>& ls,
                                  const TruncSeries& z) {
  const uint32_t p = F->p;
  std::vector<TruncSeries> acc{TruncSeries(RatFunc(FqElem::one(F))).promoted(z.ram())};
  for (uint64_t l : ls) {
    std::vector<uint32_t> digits = digits_base_p(l, p);
    if (digits.empty()) digits.push_back(0);
    uint64_t pe = 1;
    for (size_t j = 0; j < digits.size(); ++j) {
      uint32_t lj = digits[j];
      std::vector<uint32_t> binoms = lucas_row(lj, p);
      // factor vector: binom(lj, n) z^{p^j (lj - n)}, n = 0..lj
      std::vector<TruncSeries> factor;
      for (uint32_t n = 0; n <= lj; ++n) {
        TruncSeries zz = z.pow((long long)pe * (long long)(lj - n));
        factor.push_back(RatFunc(FqElem(F, binoms[n])) * zz);
      }
      std::vector<TruncSeries> next;
      next.reserve(acc.size() * factor.size());
      for (const auto& x : acc)
        for (const auto& y : factor) next.push_back(x * y);
      acc = std::move(next);
      pe *= p;
    }
  }
  return acc;
}

ResidualCheck poincare_specialize_check(const FqCtx* F, const std::vector<uint64_t>& ls, int w,
                                        int m, const OmegaPoint& z, int D, const Precision& prec) {
  GammaRep rep = rep_tensor_II(F, ls);
  long long lsum = 0;
  for (uint64_t l : ls) lsum += (long long)l;
  const int wp = w - int(lsum);
  if (wp <= 0) throw Error("specialize check needs w > sum l_i");
  std::vector<TruncSeries> fl = f_vector(F, ls, z.z);
  TruncSeries lhs = TruncSeries::zero_exact();
  TruncSeries rhs = TruncSeries::zero_exact();
  // maximal t-degree of rho(delta)_1 entries bounds the unknown tail after
  // the substitution t_i -> theta
  int tdeg_bound = 0;
  coset_enum(F, D, [&](const CosetRep& cr, int) {
    GMat g = cr.to_gmat();
    auto [gz, jz] = mobius_and_factor(g, z.z);
    TruncSeries um(RatFunc(FqElem::one(F)));
    if (m != 0) um = u_eval(gz, F->q, prec).pow(m);
    // lhs term: J^{-w} u^m (rho(delta)_last . F_l)
    MatR img = rep.apply(g);
    TruncSeries pair = TruncSeries::zero_exact();
    for (int j = 0; j < rep.dim; ++j) {
      const RatFunc& c = img(rep.dim - 1, j);
      if (c.is_zero()) continue;
      for (int v = 0; v < int(ls.size()); ++v)
        tdeg_bound = std::max(tdeg_bound, c.num().degree_in(v));
      pair += c * fl[size_t(j)];
    }
    lhs += jz.inverse().pow(w) * um * pair;
    rhs += jz.inverse().pow(wp) * um;
  });
  // substitute t_i -> theta in the lhs
  TruncSeries lhs_sub = lhs;
  for (size_t v = 0; v < ls.size(); ++v) lhs_sub = lhs_sub.subst_var_to_theta(int(v), tdeg_bound);
  TruncSeries diff = lhs_sub - rhs;
  // both sides share the coset tail; the common window also loses the
  // substitution shift
  Val bound = tail_bound_E(wp, z, D);
  long long units = (bound.num * 2) / bound.den - 2 * (long long)tdeg_bound;
  diff = diff.truncated(units);
  ResidualCheck rc;
  rc.residual = diff.valuation();
  rc.window = diff.prec_val();
  rc.pass = diff.is_zero_to_prec();
  rc.note = "specialization to P_{w',m}, w' = " + std::to_string(wp);
  return rc;
}

}  // namespace ffrep
