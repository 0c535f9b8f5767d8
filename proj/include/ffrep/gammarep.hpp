#pragma once

// Representations of Gamma = GL_2(A): symmetric powers, the Lucas-extracted
// sub-representation, digit tensor products with Frobenius twists, tensor
// products over independent variables, determinant twists, digit
// combinatorics, carry-free evaluation, and the specialization machinery.

#include <functional>
#include <optional>
#include <random>

#include "ffrep/lfunc.hpp"

namespace ffrep {

inline GMat gmat(const APoly& a, const APoly& b, const APoly& c, const APoly& d) {
  GMat m;
  m(0, 0) = a; m(0, 1) = b;
  m(1, 0) = c; m(1, 1) = d;
  return m;
}
APoly gmat_det(const GMat& m);
GMat gmat_identity(const FqCtx* F);

// documented sample family: GL_2(F_q) generators plus elementary matrices
// E12(c theta^k), E21(c theta^k) for k <= K, c in F_q^x
std::vector<GMat> gamma_sample(const FqCtx* F, int K = 4);
// seeded random products of sample elements with entry degree <= maxdeg
GMat random_gamma(const FqCtx* F, std::mt19937_64& rng, int maxdeg = 3);

// action on the monomial basis X^{r-i} Y^i, i = 0..r (columns indexed by i)
template <class S>
Mat<S> sym_power(const Eigen::Matrix<S, 2, 2>& g, int r) {
  // column i lists the coefficients of (aX+cY)^{r-i} (bX+dY)^i
  Mat<S> out(r + 1, r + 1);
  for (int i = 0; i <= r; ++i) {
    // expand (a X + c Y)^{r-i} * (b X + d Y)^i as a vector over X^{r-j} Y^j
    std::vector<S> acc{S(1)};
    auto mul_linear = [&](const S& x, const S& y) {
      std::vector<S> next(acc.size() + 1, S(0));
      for (size_t k = 0; k < acc.size(); ++k) {
        next[k] = next[k] + x * acc[k];
        next[k + 1] = next[k + 1] + y * acc[k];
      }
      acc = std::move(next);
    };
    for (int k = 0; k < r - i; ++k) mul_linear(g(0, 0), g(1, 0));
    for (int k = 0; k < i; ++k) mul_linear(g(0, 1), g(1, 1));
    for (int j = 0; j <= r; ++j) out(j, i) = acc[size_t(j)];
  }
  return out;
}

// rows/columns of sym_power(g, l) kept where binom(l, r) != 0 mod p
template <class S>
Mat<S> rho_star(const Eigen::Matrix<S, 2, 2>& g, int l, uint32_t p) {
  Mat<S> full = sym_power<S>(g, l);
  std::vector<uint32_t> row = lucas_row(uint64_t(l), p);
  std::vector<int> keep;
  for (int i = 0; i <= l; ++i)
    if (row[size_t(i)]) keep.push_back(i);
  Mat<S> out(int(keep.size()), int(keep.size()));
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) out(int(i), int(j)) = full(keep[i], keep[j]);
  return out;
}

uint64_t phi_p(uint64_t l, uint32_t p);
// the concatenation sequence a_n = [a_{n-1}, 2a_{n-1}, ..., p a_{n-1}]
std::vector<uint64_t> digit_sequence(uint32_t p, size_t count);
// permute base-p digit positions of l (finite-support permutation given as
// a vector: position i receives the digit of position perm[i])
uint64_t sp_action(const std::vector<uint32_t>& perm, uint64_t l, uint32_t p);

struct GammaRep {
  const FqCtx* F = nullptr;
  int dim = 0;
  int svars = 0;                 // number of t-variables the entries use
  int depth = 0;                 // normal depth (0 = unknown)
  std::vector<int> depth_rows;   // rows forming the coset-stable block
  long long central_exp = 0;     // rho(uI) = u^central_exp I for u in F_q^x
  std::string recipe;
  std::vector<AlgebraRep> sigma_sources;  // rho_sigma building blocks, if any
  std::vector<uint64_t> digit_ls;         // digit-representation exponents, if any
  std::function<MatR(const GMat&)> apply;
};

// chi_t composed with the tautological representation (dim 2)
GammaRep rep_tautological(const FqCtx* F, int var = 0);
// rho^I_l with chi on the given variable: tensor over base-p digits of
// sym powers with Frobenius twists, digit-major Kronecker order (digit 0
// is the leftmost, slowest index)
GammaRep rep_digits(const FqCtx* F, uint64_t l, int var = 0);
// block representation from an algebra representation (dim 2d, depth d)
GammaRep rep_rho_sigma(const AlgebraRep& rep);
// Kronecker product (left factor slowest); depth data combined
GammaRep rep_tensor(const GammaRep& a, const GammaRep& b);
// rho^II: tensor of rep_digits(l_i) on variables 0..s-1
GammaRep rep_tensor_II(const FqCtx* F, const std::vector<uint64_t>& ls);
// twist by det^{-m}
GammaRep det_twist(const GammaRep& rep, long long m);
// entrywise p^k-th power
GammaRep frobenius_twist(const GammaRep& rep, uint32_t k);

// every sampled h = (u, b; 0, 1) maps to (*, *; 0, I_L) on the depth rows
bool normal_depth_check(const GammaRep& rep, int L, const std::vector<GMat>& h_sample);
std::vector<GMat> h_sample(const FqCtx* F, int K = 4);

// exact homomorphism check on random pairs
bool homomorphism_check(const GammaRep& rep, std::mt19937_64& rng, int pairs = 50, int maxdeg = 3);

struct CarryFree {
  std::vector<int> k;       // exponents, q^{k_i}
  uint64_t l_total = 0;
  // basis permutation: target (rho^I_{l_total}) index -> source (rho^II) index
  std::vector<int> perm;
};
// minimal 0 <= k_1 <= ... <= k_s with disjoint base-p digit blocks
CarryFree carry_free_exponents(const std::vector<uint64_t>& ls, const FqCtx* F);

// substitute t_i -> t^{q^{k_i}} entrywise in a matrix over K_s
MatR substitute_carry_free(const MatR& m, const CarryFree& cf, const FqCtx* F);

// entrywise evaluation theta -> zeta in an extension of F_p (requires q = p)
Eigen::Matrix<FqElem, 2, 2> ev_zeta(const GMat& g, const FqElem& zeta);
// BFS closure of the generated matrix group; throws if it exceeds cap
uint64_t group_closure_order(const std::vector<MatF>& gens, uint64_t cap = 100000);

// exact spin closure of the column span under the sampled images
MatR spin_closure(const MatR& seed, const std::vector<MatR>& images);

// invertible M with A_i M = M B_i for all i, found on the given images and
// verified exactly; nullopt when no invertible intertwiner is found
std::optional<MatR> solve_intertwiner(const std::vector<MatR>& a_imgs,
                                      const std::vector<MatR>& b_imgs, uint64_t seed);

struct GenericIrredResult {
  Verdict verdict = Verdict::Unknown;
  MatR certificate;  // columns span a proper invariant subspace when Reducible
  std::string detail;
};
// sound specialization test over the sampled group elements; Reducible only
// with an exactly verified symbolic invariant subspace
GenericIrredResult generic_irreducible(const GammaRep& rep, uint64_t seed);

}  // namespace ffrep
