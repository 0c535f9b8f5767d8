#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffrep/fq.hpp"

using namespace ffrep;

TEST_CASE("prime field arithmetic satisfies the field axioms exhaustively") {
  for (uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull, 8ull, 9ull}) {
    const FqCtx* F = fq_context_q(q);
    auto els = all_elements(F);
    REQUIRE(els.size() == q);
    for (const auto& a : els) {
      CHECK(a + FqElem::zero(F) == a);
      CHECK(a * FqElem::one(F) == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      // x^q = x
      CHECK(a.pow(q) == a);
    }
    for (const auto& a : els)
      for (const auto& b : els) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : els) {
          CHECK((a + b) + c == a + (b + c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
  }
}

TEST_CASE("frobenius is additive") {
  for (uint64_t q : {4ull, 8ull, 9ull, 25ull, 27ull}) {
    const FqCtx* F = fq_context_q(q);
    auto els = all_elements(F);
    for (const auto& a : els)
      for (const auto& b : els) CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
  }
}

TEST_CASE("literal coercion") {
  const FqCtx* F = fq_context(5);
  FqElem a(F, 3);
  CHECK(a + FqElem(0) == a);
  CHECK((a * FqElem(1)) == a);
  CHECK((FqElem(-1) * a) == -a);
  CHECK(FqElem(7) + a == FqElem(F, 10));
}

TEST_CASE("explicit modulus validation") {
  CHECK_THROWS_AS(fq_context(4), ConfigError);                      // not prime
  CHECK_THROWS_AS(fq_context(2, 2, {0, 0, 1}), ConfigError);        // x^2 reducible
  CHECK_THROWS_AS(fq_context(3, 2, {2, 0, 1}), ConfigError);        // x^2+2=(x-1)(x+1)
  const FqCtx* F = fq_context(2, 2, {1, 1, 1});                     // x^2+x+1
  CHECK(F->q == 4);
  CHECK(F == fq_context_q(4));  // interning finds the built-in (same modulus)
}

TEST_CASE("embedding into an extension") {
  const FqCtx* F4 = fq_context_q(4);
  const FqCtx* F16 = fq_context_q(16);
  auto els = all_elements(F4);
  for (const auto& a : els)
    for (const auto& b : els) {
      CHECK(embed(a * b, F16) == embed(a, F16) * embed(b, F16));
      CHECK(embed(a + b, F16) == embed(a, F16) + embed(b, F16));
    }
}

TEST_CASE("multiplicative generator") {
  for (uint64_t q : {3ull, 4ull, 5ull, 9ull}) {
    const FqCtx* F = fq_context_q(q);
    FqElem g = multiplicative_generator(F);
    uint64_t ord = 1;
    FqElem x = g;
    while (!x.is_one()) { x *= g; ++ord; }
    CHECK(ord == q - 1);
  }
}
