#pragma once

// Sparse multivariate polynomials over F_q in up to kMaxVars variables.
// Terms are kept sorted by exponent vector (lexicographic, variable 0 most
// significant), which makes the encoding canonical.

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "ffrep/apoly.hpp"
#include "ffrep/fq.hpp"

namespace ffrep {

inline constexpr int kMaxVars = 16;

struct ExpVec {
  std::array<uint16_t, kMaxVars> e{};
  friend bool operator<(const ExpVec& a, const ExpVec& b) { return a.e < b.e; }
  friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e == b.e; }
  ExpVec operator+(const ExpVec& o) const {
    ExpVec r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] + o.e[i]);
    return r;
  }
  bool is_const() const {
    for (auto x : e) if (x) return false;
    return true;
  }
  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
};

class MultiPoly {
 public:
  using Term = std::pair<ExpVec, FqElem>;

  MultiPoly() = default;
  explicit MultiPoly(const FqElem& c) {
    if (!c.is_zero()) t_.push_back({ExpVec{}, c});
  }
  explicit MultiPoly(int n) : MultiPoly(FqElem(n)) {}
  static MultiPoly variable(int var, const FqCtx* F = nullptr) {
    MultiPoly r;
    ExpVec ev;
    ev.e[size_t(var)] = 1;
    r.t_.push_back({ev, F ? FqElem::one(F) : FqElem(1)});
    return r;
  }
  static MultiPoly monomial(const ExpVec& ev, const FqElem& c) {
    MultiPoly r;
    if (!c.is_zero()) r.t_.push_back({ev, c});
    return r;
  }
  // univariate APoly placed on the given variable
  static MultiPoly from_apoly(const APoly& a, int var) {
    MultiPoly r;
    for (int i = a.deg(); i >= 0; --i) {
      FqElem c = a.coeff(size_t(i));
      if (c.is_zero()) continue;
      ExpVec ev;
      ev.e[size_t(var)] = uint16_t(i);
      r.t_.push_back({ev, c});
    }
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_const()); }
  FqElem constant_value() const { return t_.empty() ? FqElem(0) : t_[0].second; }
  const std::vector<Term>& terms() const { return t_; }
  const FqCtx* field() const {
    for (const auto& [ev, c] : t_) if (c.field()) return c.field();
    return nullptr;
  }
  int degree_in(int var) const {
    int d = 0;
    for (const auto& [ev, c] : t_) d = std::max(d, int(ev.e[size_t(var)]));
    return t_.empty() ? -1 : d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [ev, c] : t_) d = std::max(d, ev.total_degree());
    return d;
  }
  bool uses_var(int var) const {
    for (const auto& [ev, c] : t_) if (ev.e[size_t(var)]) return true;
    return false;
  }
  std::vector<int> vars_used() const {
    std::vector<int> out;
    for (int v = 0; v < kMaxVars; ++v) if (uses_var(v)) out.push_back(v);
    return out;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
        r.t_.push_back(a.t_[i++]);
      } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
        r.t_.push_back(b.t_[j++]);
      } else {
        FqElem c = a.t_[i].second + b.t_[j].second;
        if (!c.is_zero()) r.t_.push_back({a.t_[i].first, c});
        ++i; ++j;
      }
    }
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [ev, c] : r.t_) c = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const FqElem& s, const MultiPoly& a) {
    if (s.is_zero()) return MultiPoly();
    MultiPoly r = a;
    for (auto& [ev, c] : r.t_) c = s * c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].first == b.t_[i].first) || a.t_[i].second != b.t_[i].second) return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(uint64_t n) const {
    MultiPoly r(1), b = *this;
    while (n) { if (n & 1) r *= b; if (n >>= 1) b *= b; }
    return r;
  }
  MultiPoly coerced(const FqCtx* F) const {
    MultiPoly r = *this;
    for (auto& [ev, c] : r.t_) c = c.coerced(F);
    return r;
  }
  MultiPoly frobenius(uint32_t p_power_times = 1) const {  // entry-wise coeff^p, exps * p
    MultiPoly r;
    const FqCtx* F = field();
    uint32_t p = F ? F->p : 0;
    for (auto [ev, c] : t_) {
      for (uint32_t k = 0; k < p_power_times; ++k) {
        for (auto& x : ev.e) x = uint16_t(x * p);
        c = c.frobenius();
      }
      r.t_.push_back({ev, c});
    }
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return r;
  }

  FqElem eval(const std::vector<FqElem>& point) const {
    FqElem acc(0);
    for (const auto& [ev, c] : t_) {
      FqElem m = c;
      for (int v = 0; v < kMaxVars; ++v)
        if (ev.e[size_t(v)]) m *= point.at(size_t(v)).pow(ev.e[size_t(v)]);
      acc += m;
    }
    return acc;
  }
  // substitute each variable by another MultiPoly
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    MultiPoly acc;
    for (const auto& [ev, c] : t_) {
      MultiPoly m(c);
      for (int v = 0; v < kMaxVars; ++v)
        if (ev.e[size_t(v)]) m *= images.at(size_t(v)).pow(ev.e[size_t(v)]);
      acc += m;
    }
    return acc;
  }
  MultiPoly derivative(int var) const {
    MultiPoly r;
    for (auto [ev, c] : t_) {
      uint16_t k = ev.e[size_t(var)];
      if (!k) continue;
      FqElem nc = FqElem(int(k)) * c;
      if (nc.is_zero()) continue;
      ev.e[size_t(var)] = uint16_t(k - 1);
      r.t_.push_back({ev, nc});
    }
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return r;
  }
  // univariate extraction when at most the given variable occurs
  APoly to_apoly(int var) const {
    std::vector<FqElem> v;
    for (const auto& [ev, c] : t_) {
      for (int w = 0; w < kMaxVars; ++w)
        if (w != var && ev.e[size_t(w)]) throw Error("to_apoly: poly is not univariate");
      size_t k = ev.e[size_t(var)];
      if (v.size() <= k) v.resize(k + 1, FqElem(0));
      v[k] = c;
    }
    return APoly(field(), v);
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& a);

 private:
  std::vector<Term> t_;  // sorted by ExpVec
};

}  // namespace ffrep
