#pragma once

// Dense univariate polynomials over K_s = F_q(t_1,...,t_s), used for
// characteristic/minimal polynomials, companion input, and the eigenvalue
// membership tests.

#include "ffrep/linalg.hpp"

namespace ffrep {

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(int n) { if (n) c_.push_back(RatFunc(n)); }
  explicit RatPoly(const RatFunc& a) { if (!a.is_zero()) c_.push_back(a); }
  explicit RatPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly x() { return RatPoly({RatFunc(), RatFunc(1)}); }

  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  RatFunc coeff(size_t i) const { return i < c_.size() ? RatFunc(c_[i]) : RatFunc(); }
  const RatFunc& lead() const { return c_.back(); }
  const std::vector<RatFunc>& coeffs() const { return c_; }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(v));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<RatFunc> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(v));
  }
  RatPoly operator-() const { return RatPoly() - *this; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<RatFunc> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(v));
  }
  friend RatPoly operator*(const RatFunc& s, const RatPoly& a) {
    RatPoly r = a;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

  static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
  friend RatPoly operator/(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r; divmod(a, b, q, r); return q;
  }
  friend RatPoly operator%(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r; divmod(a, b, q, r); return r;
  }
  RatPoly monic() const {
    if (is_zero()) return *this;
    return lead().inverse() * *this;
  }
  RatPoly derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<RatFunc> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = FqElem(int(i)) * c_[i];
    return RatPoly(std::move(v));
  }

  RatFunc eval(const RatFunc& x) const {
    RatFunc acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  MatR eval(const MatR& m) const {
    int n = int(m.rows());
    MatR acc(n, n);
    acc.setZero();
    for (size_t i = c_.size(); i-- > 0;) {
      acc = acc * m;
      for (int k = 0; k < n; ++k) acc(k, k) += c_[i];
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatPoly& p);

 private:
  void trim() { while (!c_.empty() && c_.back().is_zero()) c_.pop_back(); }
  std::vector<RatFunc> c_;
};

RatPoly gcd(RatPoly a, RatPoly b);  // monic
RatPoly powmod(const RatPoly& base, uint64_t n, const RatPoly& mod);

// coefficients cleared to F_q[t] (single variable var), content removed
std::vector<APoly> to_bipoly_primitive(const RatPoly& f, int var, const FqCtx* F);

}  // namespace ffrep
