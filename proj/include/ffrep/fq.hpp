#pragma once

// Arithmetic in F_q, q = p^e, with a polynomial basis over F_p.
// Field contexts are interned; elements either carry a context pointer or are
// context-free integer literals (0, 1, -1, ...) that coerce on first contact
// with a field element.  The literal state is what lets these scalars live
// inside Eigen matrices, whose kernels construct Scalar(0) and Scalar(1).

#include <array>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "ffrep/errors.hpp"

namespace ffrep {

inline constexpr int kMaxExtDegree = 8;

struct FqCtx {
  uint32_t p = 0;
  uint32_t e = 1;
  uint64_t q = 0;
  // modulus x^e + mod[e-1] x^{e-1} + ... + mod[0], coefficients in F_p.
  std::array<uint8_t, kMaxExtDegree> mod{};

  bool same(uint32_t p2, uint32_t e2, const std::array<uint8_t, kMaxExtDegree>& m2) const {
    return p == p2 && e == e2 && mod == m2;
  }
};

namespace detail {
bool is_prime_u32(uint32_t n);
// irreducibility of a monic degree-e polynomial over F_p, brute force roots /
// divisor scan (only used on moduli, e <= kMaxExtDegree).
bool modulus_irreducible(uint32_t p, uint32_t e, const std::array<uint8_t, kMaxExtDegree>& mod);
}  // namespace detail

// Interned field registry.  q in {2,3,4,5,7,8,9,16,25,27} has a built-in
// modulus (Conway polynomials); other q need an explicit modulus.
const FqCtx* fq_context(uint32_t p, uint32_t e = 1, const std::vector<uint32_t>& modulus = {});
const FqCtx* fq_context_q(uint64_t q);

class FqElem {
 public:
  FqElem() = default;
  explicit FqElem(int n) : lit_(n) {}
  explicit FqElem(long n) : lit_(n) {}
  explicit FqElem(long long n) : lit_(n) {}
  FqElem(const FqCtx* F, int64_t value) : F_(F) {
    int64_t r = value % int64_t(F->p);
    if (r < 0) r += F->p;
    c_[0] = uint8_t(r);
  }
  FqElem(const FqCtx* F, const std::vector<uint32_t>& coords) : F_(F) {
    for (uint32_t i = 0; i < F->e && i < coords.size(); ++i) c_[i] = uint8_t(coords[i] % F->p);
  }

  static FqElem zero(const FqCtx* F) { return FqElem(F, 0); }
  static FqElem one(const FqCtx* F) { return FqElem(F, 1); }
  // the class of x in F_p[x]/(modulus); zero when e == 1 would be wrong, so
  // only meaningful for e >= 2.
  static FqElem gen(const FqCtx* F) {
    FqElem r(F, 0);
    if (F->e >= 2) r.c_[1] = 1;
    else r.c_[0] = 1 % F->p;
    return r;
  }
  static FqElem from_index(const FqCtx* F, uint64_t idx) {
    FqElem r(F, 0);
    for (uint32_t i = 0; i < F->e; ++i) { r.c_[i] = uint8_t(idx % F->p); idx /= F->p; }
    return r;
  }

  const FqCtx* field() const { return F_; }
  bool is_literal() const { return F_ == nullptr; }
  int64_t literal() const { return lit_; }

  bool is_zero() const {
    if (!F_) return lit_ == 0;
    for (uint32_t i = 0; i < F_->e; ++i) if (c_[i]) return false;
    return true;
  }
  bool is_one() const {
    if (!F_) return lit_ == 1;
    if (c_[0] != 1 % F_->p) return false;
    for (uint32_t i = 1; i < F_->e; ++i) if (c_[i]) return false;
    return true;
  }

  uint64_t index() const {
    if (!F_) throw Error("index() on literal FqElem");
    uint64_t idx = 0;
    for (int i = int(F_->e) - 1; i >= 0; --i) idx = idx * F_->p + c_[i];
    return idx;
  }
  uint32_t coord(uint32_t i) const { return c_[i]; }
  std::vector<uint32_t> coords() const {
    if (!F_) throw Error("coords() on literal FqElem");
    std::vector<uint32_t> v(F_->e);
    for (uint32_t i = 0; i < F_->e; ++i) v[i] = c_[i];
    return v;
  }

  friend FqElem operator+(const FqElem& a, const FqElem& b) {
    const FqCtx* F = joined(a, b);
    if (!F) return FqElem(a.lit_ + b.lit_);
    FqElem x = a.coerced(F), y = b.coerced(F), r(F, 0);
    for (uint32_t i = 0; i < F->e; ++i) r.c_[i] = uint8_t((x.c_[i] + y.c_[i]) % F->p);
    return r;
  }
  friend FqElem operator-(const FqElem& a, const FqElem& b) {
    const FqCtx* F = joined(a, b);
    if (!F) return FqElem(a.lit_ - b.lit_);
    FqElem x = a.coerced(F), y = b.coerced(F), r(F, 0);
    for (uint32_t i = 0; i < F->e; ++i) r.c_[i] = uint8_t((x.c_[i] + F->p - y.c_[i]) % F->p);
    return r;
  }
  FqElem operator-() const { return FqElem(0) - *this; }
  friend FqElem operator*(const FqElem& a, const FqElem& b) {
    const FqCtx* F = joined(a, b);
    if (!F) return FqElem(a.lit_ * b.lit_);
    FqElem x = a.coerced(F), y = b.coerced(F);
    if (F->e == 1) return FqElem(F, int64_t(x.c_[0]) * y.c_[0]);
    // schoolbook product then reduction by the monic modulus
    std::array<uint32_t, 2 * kMaxExtDegree> prod{};
    for (uint32_t i = 0; i < F->e; ++i) {
      if (!x.c_[i]) continue;
      for (uint32_t j = 0; j < F->e; ++j) prod[i + j] += uint32_t(x.c_[i]) * y.c_[j];
    }
    for (int k = int(2 * F->e) - 2; k >= int(F->e); --k) {
      uint32_t t = prod[k] % F->p;
      if (!t) continue;
      prod[k] = 0;
      for (uint32_t i = 0; i < F->e; ++i)
        prod[k - F->e + i] += t * (F->p - F->mod[i]);
    }
    FqElem r(F, 0);
    for (uint32_t i = 0; i < F->e; ++i) r.c_[i] = uint8_t(prod[i] % F->p);
    return r;
  }
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }

  FqElem pow(uint64_t n) const {
    const FqCtx* F = F_;
    if (!F) {
      if (lit_ == 0) return FqElem(n == 0 ? 1 : 0);
      if (lit_ == 1) return FqElem(1);
      throw Error("pow on non-trivial literal FqElem");
    }
    FqElem r = one(F), b = *this;
    while (n) {
      if (n & 1) r *= b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }
  FqElem inverse() const {
    if (is_zero()) throw ZeroDivision("FqElem::inverse");
    if (!F_) {
      if (lit_ == 1) return FqElem(1);
      if (lit_ == -1) return FqElem(-1);
      throw Error("inverse on literal FqElem");
    }
    return pow(F_->q - 2);
  }
  FqElem frobenius() const {  // x -> x^p
    if (!F_) return *this;
    return pow(F_->p);
  }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    const FqCtx* F = joined(a, b);
    if (!F) return a.lit_ == b.lit_;
    return a.coerced(F).c_ == b.coerced(F).c_;
  }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  FqElem coerced(const FqCtx* F) const {
    if (F_ == F) return *this;
    if (F_) throw Error("FqElem field mismatch");
    return FqElem(F, lit_);
  }

  friend std::ostream& operator<<(std::ostream& os, const FqElem& a) {
    if (!a.F_) return os << a.lit_;
    if (a.F_->e == 1) return os << uint32_t(a.c_[0]);
    os << "[";
    for (uint32_t i = 0; i < a.F_->e; ++i) os << (i ? "," : "") << uint32_t(a.c_[i]);
    return os << "]";
  }

 private:
  static const FqCtx* joined(const FqElem& a, const FqElem& b) {
    if (a.F_ && b.F_ && a.F_ != b.F_) throw Error("FqElem field mismatch");
    return a.F_ ? a.F_ : b.F_;
  }

  const FqCtx* F_ = nullptr;
  int64_t lit_ = 0;
  std::array<uint8_t, kMaxExtDegree> c_{};
};

// Embeds a into the extension E (the subfield copy inside E found by mapping
// the generator of F onto a root of F's modulus in E; identity on prime
// fields).  Throws Unsupported when no embedding exists.
FqElem embed(const FqElem& a, const FqCtx* E);

// Deterministic enumeration 0, 1, ..., q-1 by index.
std::vector<FqElem> all_elements(const FqCtx* F);

// Smallest generator of the multiplicative group (by index order).
FqElem multiplicative_generator(const FqCtx* F);

}  // namespace ffrep
