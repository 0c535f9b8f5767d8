#pragma once

// Dense univariate polynomials over F_q: the ring A = F_q[theta].
// Also used for univariate work over any coefficient field F_q' (meataxe
// characteristic polynomials, modulus checks, divisor searches).

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

#include "ffrep/fq.hpp"

namespace ffrep {

class APoly {
 public:
  APoly() = default;
  explicit APoly(int n) { if (n) c_.push_back(FqElem(n)); }
  explicit APoly(const FqElem& a) { if (!a.is_zero()) c_.push_back(a); }
  APoly(const FqCtx* F, std::vector<FqElem> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x = x.coerced(F);
    trim();
  }
  static APoly zero() { return APoly(); }
  static APoly one(const FqCtx* F) { return APoly(FqElem::one(F)); }
  static APoly theta(const FqCtx* F) {
    return APoly(F, {FqElem::zero(F), FqElem::one(F)});
  }
  static APoly theta_pow(const FqCtx* F, size_t k) {
    std::vector<FqElem> v(k + 1, FqElem::zero(F));
    v[k] = FqElem::one(F);
    return APoly(F, v);
  }
  // polynomial from base-q digits of idx (lowest digit = constant term)
  static APoly from_index(const FqCtx* F, uint64_t idx) {
    std::vector<FqElem> v;
    while (idx) { v.push_back(FqElem::from_index(F, idx % F->q)); idx /= F->q; }
    return APoly(F, v);
  }

  int deg() const { return int(c_.size()) - 1; }  // deg 0 = -1
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  const FqCtx* field() const {
    for (const auto& x : c_) if (x.field()) return x.field();
    return nullptr;
  }
  FqElem coeff(size_t i) const { return i < c_.size() ? c_[i] : FqElem(0); }
  FqElem lead() const { return c_.empty() ? FqElem(0) : c_.back(); }
  const std::vector<FqElem>& coeffs() const { return c_; }

  friend APoly operator+(const APoly& a, const APoly& b) {
    std::vector<FqElem> v(std::max(a.c_.size(), b.c_.size()), FqElem(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    APoly r; r.c_ = std::move(v); r.trim(); return r;
  }
  friend APoly operator-(const APoly& a, const APoly& b) {
    std::vector<FqElem> v(std::max(a.c_.size(), b.c_.size()), FqElem(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    APoly r; r.c_ = std::move(v); r.trim(); return r;
  }
  APoly operator-() const { return APoly() - *this; }
  friend APoly operator*(const APoly& a, const APoly& b) {
    if (a.is_zero() || b.is_zero()) return APoly();
    std::vector<FqElem> v(a.c_.size() + b.c_.size() - 1, FqElem(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    APoly r; r.c_ = std::move(v); r.trim(); return r;
  }
  friend APoly operator*(const FqElem& s, const APoly& a) {
    APoly r = a;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }
  APoly& operator+=(const APoly& o) { return *this = *this + o; }
  APoly& operator-=(const APoly& o) { return *this = *this - o; }
  APoly& operator*=(const APoly& o) { return *this = *this * o; }

  friend bool operator==(const APoly& a, const APoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const APoly& a, const APoly& b) { return !(a == b); }

  // division with remainder, divisor need not be monic
  static void divmod(const APoly& a, const APoly& b, APoly& q, APoly& r) {
    if (b.is_zero()) throw ZeroDivision("APoly::divmod");
    q = APoly();
    r = a;
    FqElem li = b.lead().inverse();
    while (!r.is_zero() && r.deg() >= b.deg()) {
      FqElem f = r.lead() * li;
      size_t k = size_t(r.deg() - b.deg());
      std::vector<FqElem> qc(k + 1, FqElem(0));
      qc[k] = f;
      APoly m; m.c_ = std::move(qc);
      q += m;
      r -= m * b;
    }
  }
  friend APoly operator/(const APoly& a, const APoly& b) {
    APoly q, r; divmod(a, b, q, r); return q;
  }
  friend APoly operator%(const APoly& a, const APoly& b) {
    APoly q, r; divmod(a, b, q, r); return r;
  }

  APoly monic() const {
    if (is_zero()) return *this;
    return lead().inverse() * *this;
  }
  APoly pow(uint64_t n) const {
    APoly r(1), b = *this;
    while (n) { if (n & 1) r *= b; if (n >>= 1) b *= b; }
    return r;
  }
  APoly derivative() const {
    if (c_.size() <= 1) return APoly();
    std::vector<FqElem> v(c_.size() - 1, FqElem(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = FqElem(int(i)) * c_[i];
    APoly r; r.c_ = std::move(v); r.trim(); return r;
  }
  // entry-wise p-th power of coefficients and substitution theta -> theta^p
  // are both expressible via pow(); this is the coefficient Frobenius.
  APoly coeff_frobenius(uint32_t times = 1) const {
    APoly r = *this;
    for (auto& x : r.c_)
      for (uint32_t k = 0; k < times; ++k) x = x.frobenius();
    return r;
  }

  // Horner evaluation in any ring T supported by acc = acc*x + coeff*one.
  template <class T>
  T eval(const T& x, const T& one) const {
    T acc = one - one;  // zero of the target ring
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + coeff(i) * one;
    return acc;
  }
  FqElem eval(const FqElem& x) const {
    FqElem acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const APoly& a);

 private:
  void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
  std::vector<FqElem> c_;
};

APoly gcd(APoly a, APoly b);             // monic gcd
APoly gcd_ext(APoly a, APoly b, APoly& x, APoly& y);  // g = ax + by, g monic
APoly powmod(const APoly& base, uint64_t n, const APoly& mod);

bool is_irreducible(const APoly& f);
APoly squarefree_part(const APoly& f);
// monic irreducible factors with multiplicity, deterministic given seed
std::vector<std::pair<APoly, int>> factor(const APoly& f, uint64_t seed = 1);
// all monic divisors of f (from its factorization)
std::vector<APoly> monic_divisors(const APoly& f, uint64_t seed = 1);

// Streaming enumeration of the q^d monic polynomials of degree d, in
// lexicographic order on coefficient vectors (constant term varies fastest,
// field elements ordered by index).
class MonicRange {
 public:
  MonicRange(const FqCtx* F, int d) : F_(F), d_(d) {
    count_ = 1;
    for (int i = 0; i < d; ++i) count_ *= F->q;
  }
  uint64_t size() const { return count_; }
  APoly at(uint64_t i) const {
    std::vector<FqElem> v(size_t(d_) + 1, FqElem::zero(F_));
    for (int k = 0; k < d_; ++k) { v[size_t(k)] = FqElem::from_index(F_, i % F_->q); i /= F_->q; }
    v[size_t(d_)] = FqElem::one(F_);
    return APoly(F_, v);
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (uint64_t i = 0; i < count_; ++i) fn(at(i));
  }

 private:
  const FqCtx* F_;
  int d_;
  uint64_t count_;
};

// All monic polynomials of degree <= D (degree-major order).
template <class Fn>
void for_each_monic_upto(const FqCtx* F, int D, Fn&& fn) {
  for (int d = 0; d <= D; ++d) MonicRange(F, d).for_each(fn);
}

// Monic irreducibles of degree <= d_max, ascending degree then enum order.
std::vector<APoly> irreducible_enum(const FqCtx* F, int d_max);
// number of monic irreducibles of degree d: (1/d) sum_{k|d} mu(k) q^{d/k}
uint64_t irreducible_count(uint64_t q, int d);

// base-p digits, least significant first; empty for l = 0
std::vector<uint32_t> digits_base_p(uint64_t l, uint32_t p);
// binomial row (binom(l,0), ..., binom(l,l)) mod p via Lucas
std::vector<uint32_t> lucas_row(uint64_t l, uint32_t p);

}  // namespace ffrep
