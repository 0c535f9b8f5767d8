#pragma once

// Elements of K_s = F_q(t_1,...,t_s) as fractions of sparse multivariate
// polynomials.  Fractions over a single variable are kept gcd-reduced with
// monic denominator; with two or more variables they stay lazily unreduced
// and equality is decided by cross-multiplication.

#include <optional>
#include <ostream>

#include "ffrep/multipoly.hpp"

namespace ffrep {

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  explicit RatFunc(int n) : num_(n), den_(1) {}
  explicit RatFunc(const FqElem& c) : num_(c), den_(1) {}
  explicit RatFunc(const MultiPoly& n) : num_(n), den_(1) {}
  RatFunc(MultiPoly n, MultiPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw ZeroDivision("RatFunc denominator");
    if (den_is_one()) { den_ = MultiPoly(1); return; }
    reduce();
  }
  static RatFunc variable(int var, const FqCtx* F = nullptr) {
    return RatFunc(MultiPoly::variable(var, F));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  FqElem constant_value() const {
    if (!is_constant()) throw Error("RatFunc: not a constant");
    return num_.constant_value() * den_.constant_value().inverse();
  }
  const FqCtx* field() const {
    const FqCtx* F = num_.field();
    return F ? F : den_.field();
  }
  MultiPoly polynomial() const {
    if (!is_polynomial()) throw Error("RatFunc: not a polynomial");
    return den_.constant_value().inverse() * num_;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_is_one() && b.den_is_one()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_is_one() && b.den_is_one()) return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const FqElem& s, const RatFunc& a) {
    if (s.is_zero()) return RatFunc();
    RatFunc r = a;
    r.num_ = s * r.num_;
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDivision("RatFunc");
    if (a.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw ZeroDivision("RatFunc::inverse");
    RatFunc r(den_, num_);
    // a literal denominator must not turn into a context-free numerator
    if (const FqCtx* f = field(); f && !r.num_.field()) r.num_ = r.num_.coerced(f);
    return r;
  }
  RatFunc pow(uint64_t n) const {
    RatFunc r(1), b = *this;
    while (n) { if (n & 1) r *= b; if (n >>= 1) b *= b; }
    return r;
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.num_.is_zero()) return b.num_.is_zero();
    // cross-multiplication; reduced univariate forms usually short-circuit
    if (a.num_ == b.num_ && a.den_ == b.den_) return true;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  FqElem eval(const std::vector<FqElem>& point) const {
    FqElem d = den_.eval(point);
    if (d.is_zero()) throw ZeroDivision("RatFunc::eval at pole");
    return num_.eval(point) * d.inverse();
  }
  RatFunc substitute(const std::vector<MultiPoly>& images) const {
    MultiPoly d = den_.substitute(images);
    if (d.is_zero()) throw ZeroDivision("RatFunc::substitute hits pole");
    return RatFunc(num_.substitute(images), d);
  }
  RatFunc derivative(int var) const {
    // (n/d)' = (n'd - nd')/d^2
    return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& a) {
    if (a.den_.is_constant() && a.den_.constant_value().is_one()) return os << a.num_;
    return os << "(" << a.num_ << ")/(" << a.den_ << ")";
  }

 private:
  void reduce();
  bool den_is_one() const { return den_.is_constant() && den_.constant_value().is_one(); }
  MultiPoly num_, den_;
};

// evaluate at a point of an extension E of the coefficient field, embedding
// coefficients first
FqElem embed_eval(const RatFunc& c, const std::vector<FqElem>& point, const FqCtx* E);

}  // namespace ffrep
