#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffrep/apoly.hpp"

using namespace ffrep;

namespace {
APoly random_poly(const FqCtx* F, int deg, std::mt19937_64& rng) {
  std::vector<FqElem> c(size_t(deg) + 1);
  for (auto& x : c) x = FqElem::from_index(F, rng() % F->q);
  return APoly(F, c);
}
}  // namespace

TEST_CASE("degree additivity and divmod") {
  std::mt19937_64 rng(7);
  for (uint64_t q : {2ull, 3ull, 5ull, 9ull}) {
    const FqCtx* F = fq_context_q(q);
    for (int it = 0; it < 50; ++it) {
      APoly a = random_poly(F, int(rng() % 6), rng);
      APoly b = random_poly(F, int(rng() % 6), rng);
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).deg() == a.deg() + b.deg());
      if (!b.is_zero()) {
        APoly qq, r;
        APoly::divmod(a, b, qq, r);
        CHECK(a == qq * b + r);
        CHECK(r.deg() < b.deg());
      }
    }
  }
}

TEST_CASE("gcd is monic and divides") {
  std::mt19937_64 rng(11);
  const FqCtx* F = fq_context_q(3);
  for (int it = 0; it < 40; ++it) {
    APoly a = random_poly(F, int(rng() % 5), rng);
    APoly b = random_poly(F, int(rng() % 5), rng);
    if (a.is_zero() || b.is_zero()) continue;
    APoly g = gcd(a, b);
    CHECK(g.is_monic());
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
  }
}

TEST_CASE("monic enumeration is exhaustive and ordered") {
  // q=2, d=1 -> {theta, theta+1}
  const FqCtx* F2 = fq_context_q(2);
  MonicRange r(F2, 1);
  REQUIRE(r.size() == 2);
  CHECK(r.at(0) == APoly::theta(F2));
  CHECK(r.at(1) == APoly::theta(F2) + APoly::one(F2));
  // q=3, d=0 -> {1}
  const FqCtx* F3 = fq_context_q(3);
  MonicRange r0(F3, 0);
  REQUIRE(r0.size() == 1);
  CHECK(r0.at(0).is_one());
  // product over all monic linear polys equals theta^q - theta
  for (uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    const FqCtx* F = fq_context_q(q);
    APoly prod = APoly::one(F);
    MonicRange lin(F, 1);
    lin.for_each([&](const APoly& f) { prod *= f; });
    CHECK(prod == APoly::theta_pow(F, size_t(q)) - APoly::theta(F));
  }
}

TEST_CASE("irreducible enumeration matches brute force and the necklace count") {
  // q=2, d_max=2: theta, theta+1, theta^2+theta+1
  const FqCtx* F2 = fq_context_q(2);
  auto irr2 = irreducible_enum(F2, 2);
  REQUIRE(irr2.size() == 3);
  CHECK(irr2[2] == APoly(F2, {FqElem::one(F2), FqElem::one(F2), FqElem::one(F2)}));
  // brute-force check: a degree <= 3 poly is irreducible iff no divisor of
  // smaller positive degree
  for (uint64_t q : {2ull, 3ull}) {
    const FqCtx* F = fq_context_q(q);
    for (int d = 1; d <= 3; ++d) {
      MonicRange r(F, d);
      for (uint64_t i = 0; i < r.size(); ++i) {
        APoly f = r.at(i);
        bool brute = true;
        for (int dd = 1; dd < d && brute; ++dd) {
          MonicRange rr(F, dd);
          for (uint64_t j = 0; j < rr.size() && brute; ++j)
            if ((f % rr.at(j)).is_zero()) brute = false;
        }
        CHECK(is_irreducible(f) == brute);
      }
    }
  }
  // counts: q=2, d=3 -> 2; necklace formula agrees with enumeration
  CHECK(irreducible_count(2, 3) == 2);
  for (uint64_t q : {2ull, 3ull, 4ull}) {
    const FqCtx* F = fq_context_q(q);
    for (int d = 1; d <= 4; ++d) {
      uint64_t n = 0;
      MonicRange r(F, d);
      r.for_each([&](const APoly& f) { n += is_irreducible(f) ? 1 : 0; });
      CHECK(n == irreducible_count(q, d));
    }
  }
  // q=3, d_max=1: all three degree-1 monics
  const FqCtx* F3 = fq_context_q(3);
  CHECK(irreducible_enum(F3, 1).size() == 3);
}

TEST_CASE("factorization recombines") {
  std::mt19937_64 rng(23);
  for (uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    const FqCtx* F = fq_context_q(q);
    for (int it = 0; it < 30; ++it) {
      APoly a = random_poly(F, 2 + int(rng() % 4), rng);
      if (a.deg() < 1) continue;
      auto fac = factor(a, 99);
      APoly prod = APoly(a.lead());
      for (auto& [g, m] : fac) {
        CHECK(is_irreducible(g));
        prod *= g.pow(uint64_t(m));
      }
      CHECK(prod == a);
    }
  }
}

TEST_CASE("base-p digits") {
  uint32_t p = 2;
  CHECK(digits_base_p(1 + p, p) == std::vector<uint32_t>{1, 1});
  CHECK(digits_base_p(0, p).empty());
  CHECK(digits_base_p(13, 3) == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("lucas rows") {
  // l = 1+p: nonzero exactly at 0, 1, p, p+1
  for (uint32_t p : {2u, 3u, 5u}) {
    auto row = lucas_row(1 + p, p);
    for (uint32_t r = 0; r <= 1 + p; ++r) {
      bool expect = (r == 0 || r == 1 || r == p || r == p + 1);
      CHECK((row[r] != 0) == expect);
    }
  }
  CHECK(lucas_row(0, 5) == std::vector<uint32_t>{1});
  // l=5, p=2: nonzero at 0, 1, 4, 5; cross-check with Pascal mod 2
  auto row5 = lucas_row(5, 2);
  std::vector<uint64_t> pascal{1};
  for (int n = 1; n <= 5; ++n) {
    std::vector<uint64_t> nxt(size_t(n) + 1, 1);
    for (int k = 1; k < n; ++k) nxt[size_t(k)] = pascal[size_t(k - 1)] + pascal[size_t(k)];
    pascal = nxt;
  }
  for (uint32_t r = 0; r <= 5; ++r) CHECK(row5[r] == pascal[r] % 2);
}
