#include "ffrep/gammarep.hpp"

#include <set>

#include "ffrep/meataxe.hpp"

namespace ffrep {

APoly gmat_det(const GMat& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

GMat gmat_identity(const FqCtx* F) {
  return gmat(APoly::one(F), APoly(), APoly(), APoly::one(F));
}

std::vector<GMat> gamma_sample(const FqCtx* F, int K) {
  std::vector<GMat> out;
  const APoly one = APoly::one(F), zero;
  FqElem g = multiplicative_generator(F);
  out.push_back(gmat(APoly(g), zero, zero, one));               // diag(g, 1)
  out.push_back(gmat(zero, one, one, zero));                    // swap
  for (int k = 0; k <= K; ++k) {
    for (uint64_t c = 1; c < F->q; ++c) {
      APoly e = FqElem::from_index(F, c) * APoly::theta_pow(F, size_t(k));
      out.push_back(gmat(one, e, zero, one));                   // E12(c theta^k)
      out.push_back(gmat(one, zero, e, one));                   // E21(c theta^k)
    }
  }
  return out;
}

GMat random_gamma(const FqCtx* F, std::mt19937_64& rng, int maxdeg) {
  auto sample = gamma_sample(F, std::max(1, maxdeg - 1));
  GMat acc = gmat_identity(F);
  for (int step = 0; step < 12; ++step) {
    const GMat& g = sample[rng() % sample.size()];
    GMat next = acc * g;
    int deg = -1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) deg = std::max(deg, next(i, j).deg());
    if (deg > maxdeg) break;
    acc = next;
  }
  return acc;
}

std::vector<GMat> h_sample(const FqCtx* F, int K) {
  std::vector<GMat> out;
  const APoly one = APoly::one(F), zero;
  for (uint64_t u = 1; u < F->q; ++u) {
    out.push_back(gmat(APoly(FqElem::from_index(F, u)), zero, zero, one));
    for (int k = 0; k <= K; ++k)
      out.push_back(gmat(APoly(FqElem::from_index(F, u)), APoly::theta_pow(F, size_t(k)), zero, one));
  }
  return out;
}

uint64_t phi_p(uint64_t l, uint32_t p) {
  uint64_t r = 1;
  for (uint32_t d : digits_base_p(l, p)) r *= (d + 1);
  return r;
}

std::vector<uint64_t> digit_sequence(uint32_t p, size_t count) {
  std::vector<uint64_t> a{1};
  while (a.size() < count) {
    std::vector<uint64_t> next;
    next.reserve(a.size() * p);
    for (uint32_t m = 1; m <= p; ++m)
      for (uint64_t x : a) next.push_back(uint64_t(m) * x);
    a = std::move(next);
  }
  a.resize(count);
  return a;
}

uint64_t sp_action(const std::vector<uint32_t>& perm, uint64_t l, uint32_t p) {
  std::vector<uint32_t> d = digits_base_p(l, p);
  d.resize(std::max(d.size(), perm.size()), 0);
  std::vector<uint32_t> nd(d.size(), 0);
  for (size_t i = 0; i < d.size(); ++i) {
    uint32_t src = i < perm.size() ? perm[i] : uint32_t(i);
    nd[i] = src < d.size() ? d[src] : 0;
  }
  uint64_t out = 0, pw = 1;
  for (uint32_t x : nd) { out += x * pw; pw *= p; }
  return out;
}

namespace {

Eigen::Matrix<RatFunc, 2, 2> chi_gmat(const GMat& g, int var, const FqCtx* F) {
  Eigen::Matrix<RatFunc, 2, 2> m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const APoly& a = g(i, j);
      std::vector<RatFunc> c;
      RatFunc acc;
      RatFunc t = RatFunc::variable(var, F);
      for (int k = a.deg(); k >= 0; --k) acc = acc * t + RatFunc(a.coeff(size_t(k)));
      m(i, j) = acc;
    }
  return m;
}

Eigen::Matrix<RatFunc, 2, 2> frob_gmat(const Eigen::Matrix<RatFunc, 2, 2>& m, uint64_t e) {
  Eigen::Matrix<RatFunc, 2, 2> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(i, j).pow(e);
  return r;
}

}  // namespace

GammaRep rep_digits(const FqCtx* F, uint64_t l, int var) {
  GammaRep rep;
  rep.F = F;
  rep.svars = var + 1;
  rep.dim = int(phi_p(l, F->p));
  rep.depth = 1;
  rep.depth_rows = {rep.dim - 1};
  rep.central_exp = (long long)l;
  rep.recipe = "digits(l=" + std::to_string(l) + ",t" + std::to_string(var + 1) + ")";
  rep.digit_ls = {l};
  const uint32_t p = F->p;
  std::vector<uint32_t> digits = digits_base_p(l, p);
  if (digits.empty()) digits.push_back(0);
  rep.apply = [F, var, digits, p](const GMat& g) {
    auto m = chi_gmat(g, var, F);
    MatR acc = MatR::Identity(1, 1);
    uint64_t pe = 1;
    for (size_t i = 0; i < digits.size(); ++i) {
      auto mi = frob_gmat(m, pe);
      acc = kron<RatFunc>(acc, sym_power<RatFunc>(mi, int(digits[i])));
      pe *= p;
    }
    return acc;
  };
  return rep;
}

GammaRep rep_tautological(const FqCtx* F, int var) { return rep_digits(F, 1, var); }

GammaRep rep_rho_sigma(const AlgebraRep& sigma) {
  GammaRep rep;
  rep.F = sigma.F;
  rep.svars = 0;
  for (int i = 0; i < sigma.d; ++i)
    for (int j = 0; j < sigma.d; ++j)
      for (int v : sigma.theta(i, j).num().vars_used()) rep.svars = std::max(rep.svars, v + 1);
  rep.dim = 2 * sigma.d;
  rep.depth = sigma.d;
  for (int i = sigma.d; i < 2 * sigma.d; ++i) rep.depth_rows.push_back(i);
  rep.central_exp = 1;
  rep.recipe = "rho_sigma(" + sigma.provenance + ")";
  rep.sigma_sources = {sigma};
  AlgebraRep s = sigma;
  rep.apply = [s](const GMat& g) {
    const int d = s.d;
    MatR out(2 * d, 2 * d);
    for (int bi = 0; bi < 2; ++bi)
      for (int bj = 0; bj < 2; ++bj)
        out.block(bi * d, bj * d, d, d) = sigma_eval(s, g(bi, bj));
    return out;
  };
  return rep;
}

GammaRep rep_tensor(const GammaRep& a, const GammaRep& b) {
  GammaRep rep;
  rep.F = a.F;
  rep.svars = std::max(a.svars, b.svars);
  rep.dim = a.dim * b.dim;
  rep.depth = a.depth * b.depth;
  for (int i : a.depth_rows)
    for (int j : b.depth_rows) rep.depth_rows.push_back(i * b.dim + j);
  rep.central_exp = a.central_exp + b.central_exp;
  rep.recipe = "tensor(" + a.recipe + "," + b.recipe + ")";
  rep.sigma_sources = a.sigma_sources;
  rep.sigma_sources.insert(rep.sigma_sources.end(), b.sigma_sources.begin(), b.sigma_sources.end());
  rep.digit_ls = a.digit_ls;
  rep.digit_ls.insert(rep.digit_ls.end(), b.digit_ls.begin(), b.digit_ls.end());
  auto fa = a.apply, fb = b.apply;
  rep.apply = [fa, fb](const GMat& g) { return kron<RatFunc>(fa(g), fb(g)); };
  return rep;
}

GammaRep rep_tensor_II(const FqCtx* F, const std::vector<uint64_t>& ls) {
  if (ls.empty()) {
    GammaRep rep;
    rep.F = F;
    rep.dim = 1;
    rep.depth = 1;
    rep.depth_rows = {0};
    rep.recipe = "trivial";
    rep.apply = [](const GMat&) { return MatR(MatR::Identity(1, 1)); };
    return rep;
  }
  GammaRep rep = rep_digits(F, ls[0], 0);
  for (size_t i = 1; i < ls.size(); ++i) rep = rep_tensor(rep, rep_digits(F, ls[i], int(i)));
  return rep;
}

GammaRep det_twist(const GammaRep& rep, long long m) {
  GammaRep out = rep;
  out.central_exp = rep.central_exp - 2 * m;
  out.recipe = "det_twist(" + rep.recipe + ",m=" + std::to_string(m) + ")";
  // det g lies in F_q^x so only m mod (q-1) matters
  const FqCtx* F = rep.F;
  long long qm1 = (long long)F->q - 1;
  long long mm = ((m % qm1) + qm1) % qm1;
  auto f = rep.apply;
  out.apply = [f, F, mm](const GMat& g) {
    FqElem det = gmat_det(g).coeff(0);
    FqElem scale = det.inverse().pow(uint64_t(mm));
    MatR r = f(g);
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) = scale * r(i, j);
    return r;
  };
  return out;
}

GammaRep frobenius_twist(const GammaRep& rep, uint32_t k) {
  GammaRep out = rep;
  uint64_t pe = 1;
  for (uint32_t i = 0; i < k; ++i) pe *= rep.F->p;
  out.central_exp = rep.central_exp * (long long)pe;
  out.recipe = "frobenius(" + rep.recipe + ",k=" + std::to_string(k) + ")";
  auto f = rep.apply;
  out.apply = [f, pe](const GMat& g) {
    MatR r = f(g);
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) = r(i, j).pow(pe);
    return r;
  };
  return out;
}

bool normal_depth_check(const GammaRep& rep, int L, const std::vector<GMat>& sample) {
  if (int(rep.depth_rows.size()) < L) return false;
  std::vector<int> rows(rep.depth_rows.end() - L, rep.depth_rows.end());
  for (const auto& h : sample) {
    MatR img = rep.apply(h);
    for (int k = 0; k < L; ++k) {
      int r = rows[size_t(k)];
      for (int j = 0; j < rep.dim; ++j) {
        bool is_block = false;
        int block_pos = -1;
        for (int kk = 0; kk < L; ++kk)
          if (rows[size_t(kk)] == j) { is_block = true; block_pos = kk; }
        RatFunc expect = (is_block && block_pos == k) ? RatFunc(1) : RatFunc();
        if (img(r, j) != expect) return false;
      }
    }
  }
  return true;
}

bool homomorphism_check(const GammaRep& rep, std::mt19937_64& rng, int pairs, int maxdeg) {
  const FqCtx* F = rep.F;
  // identity
  if (!mat_eq<RatFunc>(rep.apply(gmat_identity(F)), MatR(MatR::Identity(rep.dim, rep.dim))))
    return false;
  for (int it = 0; it < pairs; ++it) {
    GMat g1 = random_gamma(F, rng, maxdeg);
    GMat g2 = random_gamma(F, rng, maxdeg);
    GMat prod = g1 * g2;
    if (!mat_eq<RatFunc>(rep.apply(prod), MatR(rep.apply(g1) * rep.apply(g2)))) return false;
  }
  return true;
}

CarryFree carry_free_exponents(const std::vector<uint64_t>& ls, const FqCtx* F) {
  const uint32_t p = F->p;
  const uint32_t e = F->e;
  CarryFree cf;
  std::vector<bool> occupied;  // base-p digit positions
  auto mark = [&](size_t pos) {
    if (occupied.size() <= pos) occupied.resize(pos + 1, false);
    occupied[pos] = true;
  };
  int prev_k = 0;
  struct Factor { size_t abs_pos; int dim; size_t source_order; };
  std::vector<Factor> factors;
  size_t order = 0;
  for (size_t i = 0; i < ls.size(); ++i) {
    std::vector<uint32_t> digits = digits_base_p(ls[i], p);
    if (digits.empty()) digits.push_back(0);
    int k = (i == 0) ? 0 : prev_k;
    for (;; ++k) {
      bool ok = true;
      for (size_t j = 0; j < digits.size(); ++j) {
        if (!digits[j]) continue;
        size_t pos = size_t(k) * e + j;
        if (pos < occupied.size() && occupied[pos]) { ok = false; break; }
      }
      if (ok) break;
    }
    for (size_t j = 0; j < digits.size(); ++j) {
      if (digits[j]) mark(size_t(k) * e + j);
      factors.push_back({size_t(k) * e + j, int(digits[j]) + 1, order++});
    }
    cf.k.push_back(k);
    prev_k = k;
    uint64_t qk = 1;
    for (int kk = 0; kk < k; ++kk) qk *= F->q;
    cf.l_total += ls[i] * qk;
  }
  // permutation between the source order (blocks, digit-major inside) and the
  // target order (absolute positions ascending); dim-1 factors are inert but
  // kept to keep the flattening straightforward
  std::vector<size_t> target_order(factors.size());
  for (size_t i = 0; i < factors.size(); ++i) target_order[i] = i;
  std::sort(target_order.begin(), target_order.end(), [&](size_t x, size_t y) {
    if (factors[x].abs_pos != factors[y].abs_pos) return factors[x].abs_pos < factors[y].abs_pos;
    return factors[x].source_order < factors[y].source_order;
  });
  // strides in source order (leftmost slowest)
  std::vector<uint64_t> src_stride(factors.size(), 1);
  for (size_t i = factors.size(); i-- > 1;)
    src_stride[i - 1] = src_stride[i] * uint64_t(factors[i].dim);
  uint64_t total = src_stride.empty() ? 1 : src_stride[0] * uint64_t(factors[0].dim);
  cf.perm.assign(size_t(total), 0);
  // decompose each target flat index over target-ordered dims, reassemble in
  // source order
  for (uint64_t t = 0; t < total; ++t) {
    uint64_t rem = t;
    std::vector<int> val(factors.size(), 0);
    for (size_t pos = 0; pos < target_order.size(); ++pos) {
      // dims in target order, leftmost slowest
      uint64_t stride = 1;
      for (size_t rest = pos + 1; rest < target_order.size(); ++rest)
        stride *= uint64_t(factors[target_order[rest]].dim);
      val[target_order[pos]] = int(rem / stride);
      rem %= stride;
    }
    uint64_t s = 0;
    for (size_t i = 0; i < factors.size(); ++i) s += uint64_t(val[i]) * src_stride[i];
    cf.perm[size_t(t)] = int(s);
  }
  return cf;
}

MatR substitute_carry_free(const MatR& m, const CarryFree& cf, const FqCtx* F) {
  std::vector<MultiPoly> images(kMaxVars);
  for (int v = 0; v < kMaxVars; ++v) images[size_t(v)] = MultiPoly::variable(v, F);
  for (size_t i = 0; i < cf.k.size(); ++i) {
    uint64_t qk = 1;
    for (int kk = 0; kk < cf.k[i]; ++kk) qk *= F->q;
    images[i] = MultiPoly::variable(0, F).pow(qk);
  }
  MatR out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute(images);
  return out;
}

Eigen::Matrix<FqElem, 2, 2> ev_zeta(const GMat& g, const FqElem& zeta) {
  const FqCtx* E = zeta.field();
  Eigen::Matrix<FqElem, 2, 2> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const APoly& a = g(i, j);
      if (const FqCtx* F = a.field(); F && F->e != 1)
        throw Unsupported("ev_zeta expects entries over F_p[theta]");
      FqElem acc = FqElem::zero(E);
      for (int k = a.deg(); k >= 0; --k) {
        acc *= zeta;
        FqElem c = a.coeff(size_t(k));
        acc += c.field() ? FqElem(E, int64_t(c.index())) : c.coerced(E);
      }
      out(i, j) = acc;
    }
  return out;
}

uint64_t group_closure_order(const std::vector<MatF>& gens, uint64_t cap) {
  if (gens.empty()) return 1;
  const int n = int(gens[0].rows());
  auto key = [n](const MatF& m) {
    std::string s;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        s += std::to_string(m(i, j).is_zero() ? 0 : m(i, j).index());
        s += ',';
      }
    return s;
  };
  const FqCtx* F = nullptr;
  for (const auto& g : gens)
    for (int i = 0; i < n && !F; ++i)
      for (int j = 0; j < n && !F; ++j) F = g(i, j).field();
  MatF id(n, n);
  id.setZero();
  for (int i = 0; i < n; ++i) id(i, i) = FqElem::one(F);
  std::set<std::string> seen{key(id)};
  std::vector<MatF> frontier{id};
  while (!frontier.empty()) {
    std::vector<MatF> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        MatF w = m * g;
        if (seen.insert(key(w)).second) {
          next.push_back(w);
          if (seen.size() > cap) throw Error("group closure exceeded cap");
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

MatR spin_closure(const MatR& seed, const std::vector<MatR>& images) {
  struct EchelonR {
    std::vector<Vec<RatFunc>> rows;
    std::vector<int> pivots;
    bool add(Vec<RatFunc> v) {
      for (size_t r = 0; r < rows.size(); ++r) {
        const RatFunc& c = v(pivots[r]);
        if (!c.is_zero()) v = v - c * rows[r];
      }
      int piv = -1;
      for (int i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) { piv = i; break; }
      if (piv < 0) return false;
      v = v(piv).inverse() * v;
      rows.push_back(std::move(v));
      pivots.push_back(piv);
      return true;
    }
  } ech;
  std::vector<Vec<RatFunc>> work;
  for (int j = 0; j < seed.cols(); ++j) {
    Vec<RatFunc> v = seed.col(j);
    if (ech.add(v)) work.push_back(v);
  }
  size_t head = 0;
  while (head < work.size()) {
    Vec<RatFunc> v = work[head++];
    for (const auto& g : images) {
      Vec<RatFunc> w = g * v;
      if (ech.add(w)) work.push_back(w);
    }
  }
  MatR out(seed.rows(), int(work.size()));
  for (size_t j = 0; j < work.size(); ++j) out.col(int(j)) = work[j];
  return out;
}

std::optional<MatR> solve_intertwiner(const std::vector<MatR>& a_imgs,
                                      const std::vector<MatR>& b_imgs, uint64_t seed) {
  if (a_imgs.empty() || a_imgs.size() != b_imgs.size()) return std::nullopt;
  const int n = int(a_imgs[0].rows());
  const int unknowns = n * n;
  MatR sys(int(a_imgs.size()) * unknowns, unknowns);
  sys.setZero();
  int row = 0;
  for (size_t k = 0; k < a_imgs.size(); ++k) {
    const MatR& A = a_imgs[k];
    const MatR& B = b_imgs[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // (A M - M B)(i, j) = sum_m A(i,m) M(m,j) - M(i,m) B(m,j)
        for (int m = 0; m < n; ++m) {
          sys(row, m * n + j) += A(i, m);
          sys(row, i * n + m) -= B(m, j);
        }
        ++row;
      }
  }
  MatR ns = null_space<RatFunc>(sys);
  if (ns.cols() == 0) return std::nullopt;
  const FqCtx* F = nullptr;
  for (const auto& A : a_imgs)
    for (int i = 0; i < n && !F; ++i)
      for (int j = 0; j < n && !F; ++j) F = A(i, j).field();
  std::mt19937_64 rng(seed ^ 0x1e7e111ULL);
  auto assemble = [&](const std::vector<FqElem>& coeffs) {
    MatR M(n, n);
    M.setZero();
    for (int c = 0; c < ns.cols(); ++c) {
      if (coeffs[size_t(c)].is_zero()) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) += coeffs[size_t(c)] * ns(i * n + j, c);
    }
    return M;
  };
  // try basis vectors first, then seeded random combinations
  for (int c = 0; c < ns.cols(); ++c) {
    std::vector<FqElem> coeffs(size_t(ns.cols()), FqElem::zero(F));
    coeffs[size_t(c)] = FqElem::one(F);
    MatR M = assemble(coeffs);
    if (!det_exact<RatFunc>(M).is_zero()) return M;
  }
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<FqElem> coeffs(size_t(ns.cols()));
    for (auto& c : coeffs) c = FqElem::from_index(F, rng() % F->q);
    MatR M = assemble(coeffs);
    if (!det_exact<RatFunc>(M).is_zero()) return M;
  }
  return std::nullopt;
}

GenericIrredResult generic_irreducible(const GammaRep& rep, uint64_t seed) {
  GenericIrredResult res;
  const FqCtx* F = rep.F;
  std::vector<GMat> sample = gamma_sample(F, 4);
  std::vector<MatR> images;
  for (const auto& g : sample) images.push_back(rep.apply(g));

  // symbolic reducibility certificates from reducible sigma factors
  for (const auto& sigma : rep.sigma_sources) {
    auto irr = is_irreducible_sigma(sigma, seed);
    if (irr.verdict != Verdict::Reducible || irr.factor.deg() != 1) continue;
    // eigenvector for the root of the linear factor
    RatFunc root = RatFunc() - irr.factor.coeff(0);
    MatR shifted = sigma.theta;
    for (int i = 0; i < sigma.d; ++i) shifted(i, i) -= root;
    MatR eig = null_space<RatFunc>(shifted);
    if (eig.cols() == 0) continue;
    if (rep.sigma_sources.size() == 1 && rep.dim == 2 * sigma.d) {
      MatR cert(rep.dim, 2 * eig.cols());
      cert.setZero();
      for (int c = 0; c < eig.cols(); ++c)
        for (int i = 0; i < sigma.d; ++i) {
          cert(i, c) = eig(i, c);
          cert(sigma.d + i, eig.cols() + c) = eig(i, c);
        }
      MatR span = spin_closure(cert, images);
      if (span.cols() < rep.dim) {
        res.verdict = Verdict::Reducible;
        res.certificate = span;
        res.detail = "invariant subspace from reducible sigma";
        return res;
      }
    }
  }

  // sound specialization: choose an extension splitting the Frobenius twists
  uint64_t l_total = 0;
  std::vector<int> twist_exponents;
  CarryFree cf;
  if (!rep.digit_ls.empty()) {
    cf = carry_free_exponents(rep.digit_ls, F);
    l_total = cf.l_total;
  }
  uint32_t top_pos = 1;
  for (uint32_t d : digits_base_p(l_total, F->p)) (void)d;
  top_pos = uint32_t(digits_base_p(std::max<uint64_t>(l_total, 1), F->p).size());
  uint64_t bound = std::max<uint64_t>({F->q, l_total, uint64_t(rep.dim)});
  uint32_t f = std::max<uint32_t>(top_pos, 1);
  {
    uint64_t pf = 1;
    for (uint32_t i = 0; i < f; ++i) pf *= F->p;
    while (pf <= bound && (f + 1) * F->e <= uint32_t(kMaxExtDegree)) { ++f; pf *= F->p; }
  }
  const FqCtx* E = nullptr;
  try {
    E = fq_context(F->p, std::min<uint32_t>(uint32_t(kMaxExtDegree), f * F->e));
  } catch (const ConfigError&) {
    E = F;
  }
  std::mt19937_64 rng(seed ^ 0xfeedbeefULL);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<FqElem> pt(kMaxVars, FqElem::zero(E));
    if (attempt == 0 && !rep.digit_ls.empty()) {
      // carry-free guided choice: t_i -> zeta^{q^{k_i}} with zeta a generator
      FqElem zeta = multiplicative_generator(E);
      for (size_t i = 0; i < cf.k.size(); ++i) {
        uint64_t qk = 1;
        for (int kk = 0; kk < cf.k[i]; ++kk) qk *= F->q;
        pt[i] = zeta.pow(qk);
      }
    } else {
      for (int v = 0; v < rep.svars; ++v) pt[size_t(v)] = FqElem::from_index(E, rng() % E->q);
    }
    std::vector<MatF> spec;
    bool ok = true;
    for (const auto& img : images) {
      MatF m(rep.dim, rep.dim);
      for (int i = 0; i < rep.dim && ok; ++i)
        for (int j = 0; j < rep.dim && ok; ++j) {
          try {
            m(i, j) = embed_eval(img(i, j), pt, E);
          } catch (const ZeroDivision&) { ok = false; }
        }
      if (!ok) break;
      spec.push_back(m);
    }
    if (!ok) continue;
    try {
      MeataxeResult mt = meataxe_irreducible(spec, seed + uint64_t(attempt));
      if (mt.verdict == Verdict::Irreducible) {
        res.verdict = Verdict::Irreducible;
        res.detail = "irreducible specialization (" + mt.detail + ")";
        return res;
      }
    } catch (const RandomnessExhausted&) {
      continue;
    }
  }
  res.detail = "no decisive specialization";
  return res;
}

}  // namespace ffrep
