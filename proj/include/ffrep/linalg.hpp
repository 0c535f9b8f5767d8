#pragma once

// Eigen dense types over the exact scalars, plus the exact algorithms Eigen's
// numeric decompositions cannot provide (nonzero-pivot elimination,
// valuation-pivot elimination for series, Berkowitz characteristic
// polynomials, Kronecker products).

#include <Eigen/Core>

#include <algorithm>
#include <vector>

#include "ffrep/apoly.hpp"
#include "ffrep/fq.hpp"
#include "ffrep/lambda.hpp"
#include "ffrep/multipoly.hpp"
#include "ffrep/ratfunc.hpp"
#include "ffrep/series.hpp"

namespace Eigen {

#define FFREP_NUMTRAITS(S)                                              \
  template <>                                                           \
  struct NumTraits<ffrep::S> {                                          \
    typedef ffrep::S Real;                                              \
    typedef ffrep::S NonInteger;                                        \
    typedef ffrep::S Nested;                                            \
    typedef ffrep::S Literal;                                           \
    enum {                                                              \
      IsComplex = 0,                                                    \
      IsInteger = 0,                                                    \
      IsSigned = 1,                                                     \
      RequireInitialization = 1,                                        \
      ReadCost = 2,                                                     \
      AddCost = 10,                                                     \
      MulCost = 20                                                      \
    };                                                                  \
    static inline ffrep::S epsilon() { return ffrep::S(0); }            \
    static inline ffrep::S dummy_precision() { return ffrep::S(0); }    \
    static inline int digits10() { return 0; }                          \
  };

FFREP_NUMTRAITS(FqElem)
FFREP_NUMTRAITS(APoly)
FFREP_NUMTRAITS(MultiPoly)
FFREP_NUMTRAITS(RatFunc)
FFREP_NUMTRAITS(TruncSeries)
FFREP_NUMTRAITS(LambdaElem)

#undef FFREP_NUMTRAITS

}  // namespace Eigen

namespace ffrep {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatF = Mat<FqElem>;
using MatR = Mat<RatFunc>;
using MatS = Mat<TruncSeries>;
using MatL = Mat<LambdaElem>;
using GMat = Eigen::Matrix<APoly, 2, 2>;  // elements of GL_2(A)

template <class S>
bool mat_eq(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S>
bool mat_zero(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <class S, class T>
Mat<S> mat_cast(const Mat<T>& a) {
  Mat<S> r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = S(a(i, j));
  return r;
}

template <class S>
Mat<S> kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

// ---- exact elimination over a field scalar (FqElem / RatFunc) ----

template <class S>
struct Elim {
  Mat<S> reduced;          // row-reduced form
  std::vector<int> pivots; // pivot column per row
  int rank = 0;
  S det;                   // for square inputs: determinant
};

template <class S>
Elim<S> row_reduce(Mat<S> m) {
  Elim<S> e;
  e.det = S(1);
  int rows = int(m.rows()), cols = int(m.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) { m.row(piv).swap(m.row(r)); e.det = S(0) - e.det; }
    S inv = m(r, c).inverse();
    e.det = e.det * m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) = inv * m(r, j);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      S f = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  if (rows == cols && r < rows) e.det = S(0);
  e.reduced = std::move(m);
  return e;
}

template <class S>
int rank_exact(const Mat<S>& m) {
  return row_reduce<S>(m).rank;
}

template <class S>
S det_exact(const Mat<S>& m) {
  return row_reduce<S>(m).det;
}

template <class S>
Mat<S> inverse_exact(const Mat<S>& m) {
  int n = int(m.rows());
  Mat<S> aug(n, 2 * n);
  aug.setZero();
  aug.block(0, 0, n, n) = m;
  for (int i = 0; i < n; ++i) aug(i, n + i) = S(1);
  Elim<S> e = row_reduce<S>(aug);
  if (e.rank < n || e.pivots[size_t(n - 1)] >= n) throw SingularMatrix("inverse_exact");
  return e.reduced.block(0, n, n, n);
}

// right null space basis (columns), exact field scalar
template <class S>
Mat<S> null_space(const Mat<S>& m) {
  Elim<S> e = row_reduce<S>(m);
  int cols = int(m.cols());
  const size_t colsz = size_t(cols);
  std::vector<bool> is_pivot(colsz, false);
  for (int c : e.pivots) is_pivot[size_t(c)] = true;
  int nfree = cols - e.rank;
  Mat<S> basis(cols, nfree);
  basis.setZero();
  int k = 0;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[size_t(c)]) continue;
    basis(c, k) = S(1);
    for (int r = 0; r < e.rank; ++r) basis(e.pivots[size_t(r)], k) = S(0) - e.reduced(r, c);
    ++k;
  }
  return basis;
}

// solve M x = b over a field scalar; throws SingularMatrix if inconsistent
template <class S>
Vec<S> solve_exact(const Mat<S>& m, const Vec<S>& b) {
  int rows = int(m.rows()), cols = int(m.cols());
  Mat<S> aug(rows, cols + 1);
  aug.block(0, 0, rows, cols) = m;
  aug.col(cols) = b;
  Elim<S> e = row_reduce<S>(aug);
  Vec<S> x(cols);
  x.setZero();
  for (int r = 0; r < e.rank; ++r) {
    if (e.pivots[size_t(r)] == cols) throw SingularMatrix("solve_exact: inconsistent");
    x(e.pivots[size_t(r)]) = e.reduced(r, cols);
  }
  return x;
}

// ---- elimination over truncated scalars (TruncSeries / LambdaElem) ----
// Pivots are chosen by minimal valuation; singular-to-precision input throws.

template <class S>
Mat<S> inverse_series(const Mat<S>& m) {
  int n = int(m.rows());
  Mat<S> a = m, inv(n, n);
  inv.setZero();
  for (int i = 0; i < n; ++i) inv(i, i) = S(1);
  const size_t nsz = size_t(n);
  std::vector<int> colperm(nsz);
  for (int i = 0; i < n; ++i) colperm[size_t(i)] = i;
  for (int r = 0; r < n; ++r) {
    int pr = -1, pc = -1;
    Val best = Val::infinity();
    for (int i = r; i < n; ++i)
      for (int j = r; j < n; ++j) {
        if (a(i, j).is_zero_to_prec()) continue;
        Val v = a(i, j).valuation();
        if (v < best) { best = v; pr = i; pc = j; }
      }
    if (pr < 0) throw SingularMatrix("inverse_series: singular to precision");
    a.row(pr).swap(a.row(r));
    inv.row(pr).swap(inv.row(r));
    a.col(pc).swap(a.col(r));
    std::swap(colperm[size_t(pc)], colperm[size_t(r)]);
    S pinv = a(r, r).inverse();
    for (int j = 0; j < n; ++j) { a(r, j) = pinv * a(r, j); inv(r, j) = pinv * inv(r, j); }
    for (int i = 0; i < n; ++i) {
      if (i == r || a(i, r).is_zero_to_prec()) continue;
      S f = a(i, r);
      for (int j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(r, j);
        inv(i, j) = inv(i, j) - f * inv(r, j);
      }
    }
  }
  // undo the column permutation: rows of the inverse follow colperm
  Mat<S> out(n, n);
  for (int i = 0; i < n; ++i) out.row(colperm[size_t(i)]) = inv.row(i);
  return out;
}

template <class S>
Val mat_valuation(const Mat<S>& m) {
  Val v = Val::infinity();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Val w = m(i, j).valuation();
      if (w < v) v = w;
    }
  return v;
}

template <class S>
Val mat_prec(const Mat<S>& m) {
  Val v = Val::infinity();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      Val w = m(i, j).prec_val();
      if (w < v) v = w;
    }
  return v;
}

template <class S>
bool mat_zero_to_prec(const Mat<S>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero_to_prec()) return false;
  return true;
}

// Berkowitz characteristic polynomial (division-free): coefficients of
// det(x I - m), constant term first.
template <class S>
std::vector<S> charpoly_berkowitz(const Mat<S>& m) {
  int n = int(m.rows());
  if (n == 0) return {S(1)};
  // p: leading-first coefficients for the k x k leading principal block
  std::vector<S> p{S(1), S(0) - m(0, 0)};
  for (int k = 2; k <= n; ++k) {
    Mat<S> M = m.block(0, 0, k - 1, k - 1);
    Mat<S> R = m.block(k - 1, 0, 1, k - 1);
    Mat<S> C = m.block(0, k - 1, k - 1, 1);
    // Toeplitz column: 1, -a_kk, -R C, -R M C, -R M^2 C, ...
    std::vector<S> t(size_t(k) + 1, S(0));
    t[0] = S(1);
    t[1] = S(0) - m(k - 1, k - 1);
    Mat<S> acc = C;
    for (int i = 2; i <= k; ++i) {
      Mat<S> ra = R * acc;
      t[size_t(i)] = S(0) - ra(0, 0);
      if (i < k) acc = M * acc;
    }
    std::vector<S> next(size_t(k) + 1, S(0));
    for (size_t i = 0; i < next.size(); ++i)
      for (size_t j = 0; j <= i && j < p.size(); ++j)
        if (i - j < t.size() && !t[i - j].is_zero() && !p[j].is_zero())
          next[i] = next[i] + t[i - j] * p[j];
    p = std::move(next);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace ffrep
