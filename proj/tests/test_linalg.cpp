#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffrep/linalg.hpp"

using namespace ffrep;

namespace {
MatR random_matR(const FqCtx* F, int n, std::mt19937_64& rng) {
  MatR m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiPoly p(FqElem::from_index(F, rng() % F->q));
      if (rng() % 2) p += MultiPoly::variable(0, F);
      if (rng() % 3 == 0) p *= MultiPoly::variable(0, F);
      m(i, j) = RatFunc(p);
    }
  return m;
}
}  // namespace

TEST_CASE("eigen product/sum over FqElem") {
  const FqCtx* F = fq_context_q(7);
  MatF a(3, 3), b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a(i, j) = FqElem(F, i + 2 * j + 1);
      b(i, j) = FqElem(F, 3 * i + j + 2);
    }
  MatF c = a * b;
  FqElem expect(F, 0);
  for (int k = 0; k < 3; ++k) expect += a(0, k) * b(k, 0);
  CHECK(c(0, 0) == expect);
  MatF d = a * b + a;
  CHECK(d(1, 2) == c(1, 2) + a(1, 2));
  MatF id = MatF::Identity(3, 3);
  CHECK(mat_eq<FqElem>(a * id, a));
}

TEST_CASE("exact inverse and determinant over RatFunc") {
  std::mt19937_64 rng(13);
  const FqCtx* F = fq_context_q(3);
  for (int n : {1, 2, 3, 4}) {
    for (int it = 0; it < 10; ++it) {
      MatR m = random_matR(F, n, rng);
      RatFunc det = det_exact<RatFunc>(m);
      if (det.is_zero()) {
        CHECK(rank_exact<RatFunc>(m) < n);
        continue;
      }
      MatR inv = inverse_exact<RatFunc>(m);
      CHECK(mat_eq<RatFunc>(m * inv, MatR::Identity(n, n)));
      CHECK(rank_exact<RatFunc>(m) == n);
    }
  }
}

TEST_CASE("berkowitz charpoly matches cofactor determinant") {
  std::mt19937_64 rng(29);
  const FqCtx* F = fq_context_q(5);
  for (int n : {1, 2, 3}) {
    for (int it = 0; it < 8; ++it) {
      MatR m = random_matR(F, n, rng);
      auto cp = charpoly_berkowitz<RatFunc>(m);
      REQUIRE(int(cp.size()) == n + 1);
      CHECK(cp.back() == RatFunc(1));
      // constant term = det(-m) = (-1)^n det m
      RatFunc d = det_exact<RatFunc>(m);
      RatFunc expect = (n % 2) ? RatFunc() - d : d;
      CHECK(cp[0] == expect);
      // Cayley-Hamilton: cp(m) = 0
      MatR acc(n, n);
      acc.setZero();
      MatR pw = MatR::Identity(n, n);
      for (size_t k = 0; k < cp.size(); ++k) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) acc(i, j) += cp[k] * pw(i, j);
        if (k + 1 < cp.size()) pw = pw * m;
      }
      CHECK(mat_zero(acc));
    }
  }
}

TEST_CASE("null space spans the kernel") {
  const FqCtx* F = fq_context_q(3);
  MatR m(2, 3);
  RatFunc t = RatFunc::variable(0, F);
  m(0, 0) = RatFunc(1); m(0, 1) = t; m(0, 2) = RatFunc();
  m(1, 0) = RatFunc(); m(1, 1) = RatFunc(); m(1, 2) = RatFunc();
  MatR ns = null_space<RatFunc>(m);
  REQUIRE(ns.cols() == 2);
  MatR prod = m * ns;
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j) CHECK(prod(i, j).is_zero());
}

TEST_CASE("kron matches the mixed-product property") {
  std::mt19937_64 rng(31);
  const FqCtx* F = fq_context_q(3);
  MatR a = random_matR(F, 2, rng), b = random_matR(F, 2, rng);
  MatR c = random_matR(F, 2, rng), d = random_matR(F, 2, rng);
  CHECK(mat_eq<RatFunc>(kron<RatFunc>(a, b) * kron<RatFunc>(c, d), kron<RatFunc>(a * c, b * d)));
}

TEST_CASE("series matrix inverse with valuation pivoting") {
  const FqCtx* F = fq_context_q(3);
  const RatFunc one(FqElem::one(F));
  MatS m(2, 2);
  // [[theta^{-1}, 1], [1, theta+1]]: determinant theta^{-1}, pivot theta+1
  m(0, 0) = TruncSeries::monomial(1, 1, one);
  m(0, 1) = TruncSeries(one);
  m(1, 0) = TruncSeries(one);
  m(1, 1) = TruncSeries::monomial(1, -1, one) + TruncSeries(one);
  MatS inv = inverse_series<TruncSeries>(m);
  MatS prod = m * inv;
  CHECK((prod(0, 0) - TruncSeries(one)).is_zero_to_prec());
  CHECK(prod(0, 1).is_zero_to_prec());
  CHECK(prod(1, 0).is_zero_to_prec());
  CHECK((prod(1, 1) - TruncSeries(one)).is_zero_to_prec());
}
