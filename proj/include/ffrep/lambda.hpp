#pragma once

// K_{s,infinity}(lambda_theta): a formal degree-(q-1) extension with the
// single relation lambda^{q-1} = -theta.  Elements are vectors of q-1
// truncated series, component j = coefficient of lambda^j.  For q = 2 this
// degenerates to a single component with lambda = theta.

#include <vector>

#include "ffrep/series.hpp"

namespace ffrep {

class LambdaElem {
 public:
  LambdaElem() : qm1_(0), comp_(1) {}  // literal zero
  explicit LambdaElem(int n) : qm1_(0), comp_{TruncSeries(n)} {}
  explicit LambdaElem(const TruncSeries& s) : qm1_(0), comp_{s} {}
  LambdaElem(uint64_t q, std::vector<TruncSeries> comps) : qm1_(int(q) - 1), comp_(std::move(comps)) {
    comp_.resize(size_t(qm1_ == 0 ? 1 : qm1_));
  }
  static LambdaElem from_series(uint64_t q, const TruncSeries& s) {
    const size_t n = size_t(q - 1);
    std::vector<TruncSeries> c(n);
    c[0] = s;
    return LambdaElem(q, std::move(c));
  }
  // lambda_theta itself; for q = 2, lambda = -theta = theta
  static LambdaElem lambda(const FqCtx* F, int ram = 1) {
    const uint64_t q = F->q;
    const size_t n = size_t(q - 1);
    std::vector<TruncSeries> c(n);
    if (q == 2) c[0] = TruncSeries::monomial(ram, -ram, RatFunc(FqElem::one(F)));
    else c[1] = TruncSeries(RatFunc(FqElem::one(F))).promoted(ram);
    return LambdaElem(q, std::move(c));
  }

  bool is_literal() const { return qm1_ == 0; }
  int qm1() const { return qm1_; }
  const std::vector<TruncSeries>& comps() const { return comp_; }
  const TruncSeries& comp(size_t j) const { return comp_[j]; }

  LambdaElem coerced(int qm1) const {
    if (qm1_ == qm1) return *this;
    if (qm1_ != 0) throw Error("LambdaElem q mismatch");
    const size_t n = size_t(qm1);
    std::vector<TruncSeries> c(n);
    c[0] = comp_[0];
    return LambdaElem(uint64_t(qm1) + 1, std::move(c));
  }

  friend LambdaElem operator+(const LambdaElem& a0, const LambdaElem& b0) {
    int qm1 = std::max(a0.qm1_, b0.qm1_);
    if (qm1 == 0) return LambdaElem(a0.comp_[0] + b0.comp_[0]);
    LambdaElem a = a0.coerced(qm1), b = b0.coerced(qm1), r = a;
    for (size_t j = 0; j < r.comp_.size(); ++j) r.comp_[j] = a.comp_[j] + b.comp_[j];
    return r;
  }
  friend LambdaElem operator-(const LambdaElem& a, const LambdaElem& b) { return a + (-b); }
  LambdaElem operator-() const {
    LambdaElem r = *this;
    for (auto& s : r.comp_) s = -s;
    return r;
  }
  friend LambdaElem operator*(const LambdaElem& a0, const LambdaElem& b0);
  friend LambdaElem operator*(const RatFunc& s, const LambdaElem& a) {
    LambdaElem r = a;
    for (auto& x : r.comp_) x = s * x;
    return r;
  }
  friend LambdaElem operator*(const TruncSeries& s, const LambdaElem& a) {
    LambdaElem r = a;
    for (auto& x : r.comp_) x = s * x;
    return r;
  }
  LambdaElem& operator+=(const LambdaElem& o) { return *this = *this + o; }
  LambdaElem& operator-=(const LambdaElem& o) { return *this = *this - o; }
  LambdaElem& operator*=(const LambdaElem& o) { return *this = *this * o; }

  friend bool operator==(const LambdaElem& a0, const LambdaElem& b0) {
    int qm1 = std::max(a0.qm1_, b0.qm1_);
    if (qm1 == 0) return a0.comp_[0] == b0.comp_[0];
    LambdaElem a = a0.coerced(qm1), b = b0.coerced(qm1);
    for (size_t j = 0; j < a.comp_.size(); ++j)
      if (a.comp_[j] != b.comp_[j]) return false;
    return true;
  }
  friend bool operator!=(const LambdaElem& a, const LambdaElem& b) { return !(a == b); }

  LambdaElem inverse() const;
  // entrywise Frobenius twist; lambda^q = -theta * lambda
  LambdaElem tau(uint64_t q, int iterations = 1) const;

  bool is_zero_to_prec() const {
    for (const auto& s : comp_)
      if (!s.is_zero_to_prec()) return false;
    return true;
  }
  bool is_exact_zero() const {
    for (const auto& s : comp_)
      if (!s.is_exact_zero()) return false;
    return true;
  }
  // v(lambda^j x_j) = v(x_j) - j/(q-1)
  Val valuation() const {
    Val best = Val::infinity();
    for (size_t j = 0; j < comp_.size(); ++j) {
      Val v = comp_[j].valuation();
      if (!v.inf && qm1_ > 0) v = v + Val::of(-(long long)j, qm1_);
      if (v < best) best = v;
    }
    return best;
  }
  Val prec_val() const {
    Val best = Val::infinity();
    for (size_t j = 0; j < comp_.size(); ++j) {
      Val v = comp_[j].prec_val();
      if (!v.inf && qm1_ > 0) v = v + Val::of(-(long long)j, qm1_);
      if (v < best) best = v;
    }
    return best;
  }
  // cap the guaranteed precision at the given v_infinity bound
  LambdaElem truncated_prec(const Val& bound) const {
    if (bound.inf) return *this;
    if (qm1_ == 0) {
      LambdaElem r = *this;
      const int ram = r.comp_[0].ram();
      long long u = (bound.num * ram) / bound.den + ((bound.num * ram) % bound.den ? 1 : 0);
      r.comp_[0] = r.comp_[0].truncated(u);
      return r;
    }
    LambdaElem r = *this;
    for (size_t j = 0; j < r.comp_.size(); ++j) {
      // element precision B needs component precision B + j/(q-1)
      const int ram = r.comp_[j].ram();
      long long units =
          (bound.num * (long long)qm1_ + (long long)j * bound.den) * ram;
      long long den = bound.den * (long long)qm1_;
      long long u = units / den + ((units % den) ? 1 : 0);
      r.comp_[j] = r.comp_[j].truncated(u);
    }
    return r;
  }

  // components j >= 1 vanish to precision (value lies in K_{s,infinity})
  bool lambda_free_to_prec() const {
    for (size_t j = 1; j < comp_.size(); ++j)
      if (!comp_[j].is_zero_to_prec()) return false;
    return true;
  }
  const TruncSeries& scalar_part() const { return comp_[0]; }

  friend std::ostream& operator<<(std::ostream& os, const LambdaElem& a) {
    for (size_t j = 0; j < a.comp_.size(); ++j) {
      if (j) os << " + L^" << j << "*";
      os << "[" << a.comp_[j] << "]";
    }
    return os;
  }

 private:
  int qm1_;
  std::vector<TruncSeries> comp_;
};

// the Carlitz period: theta * lambda * prod_{i>0} (1 - theta^{1-q^i})^{-1}
LambdaElem pitilde(const FqCtx* F, int ram = 1);
// the unit-series factor prod_{i>0} (1 - theta^{1-q^i})^{-1}
TruncSeries pitilde_unit(const FqCtx* F, int ram = 1);

}  // namespace ffrep
