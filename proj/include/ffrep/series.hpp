#pragma once

// Truncated Laurent series in theta^{-1/ram} (ram in {1,2}) over RatFunc
// coefficients, modelling K_{s,infinity} = K_s((theta^{-1})) and its ramified
// quadratic extension.  Exponents are integers n in units of theta^{-1/ram};
// the coefficient of theta^{-n/ram} at n is stored for lo <= n < lo+size,
// coefficients in [lo+size, prec) are exactly zero, and nothing is known from
// prec on.  prec == kPrecInf marks an exact value.
//
// Valuations are normalized by v(theta) = -1, so a term at exponent n has
// valuation n/ram and norm q^{-n/ram}.

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "ffrep/ratfunc.hpp"

namespace ffrep {

inline constexpr long long kPrecInf = std::numeric_limits<long long>::max() / 4;

// exact rational valuation (num/den), +infinity for exact zero
struct Val {
  long long num = 0;
  long long den = 1;
  bool inf = false;

  static Val infinity() { return Val{0, 1, true}; }
  static Val of(long long n, long long d) {
    Val v{n, d, false};
    v.normalize();
    return v;
  }
  void normalize() {
    if (den < 0) { den = -den; num = -num; }
    long long a = num < 0 ? -num : num, b = den;
    while (b) { long long t = a % b; a = b; b = t; }
    if (a > 1) { num /= a; den /= a; }
  }
  friend bool operator<(const Val& a, const Val& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator==(const Val& a, const Val& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<=(const Val& a, const Val& b) { return a < b || a == b; }
  friend bool operator>=(const Val& a, const Val& b) { return b <= a; }
  friend bool operator>(const Val& a, const Val& b) { return b < a; }
  friend Val operator+(const Val& a, const Val& b) {
    if (a.inf || b.inf) return infinity();
    return of(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  double to_double() const { return inf ? 1e300 : double(num) / double(den); }
  std::string str() const {
    if (inf) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Working precision in v_infinity units.
struct Precision {
  int target = 60;
  int guard = 8;
  int cap() const { return target + guard; }
};

// Thread-local absolute exponent ceiling (v_infinity units) used to keep
// dense windows bounded; exact values are never truncated by it.
long long series_cap_vinf();
class SeriesCapGuard {
 public:
  explicit SeriesCapGuard(long long cap_vinf);
  ~SeriesCapGuard();

 private:
  long long old_;
};

class TruncSeries {
 public:
  TruncSeries() : ram_(1), lo_(0), prec_(kPrecInf) {}
  explicit TruncSeries(int n) : TruncSeries(RatFunc(n)) {}
  explicit TruncSeries(const RatFunc& c) : ram_(1), lo_(0), prec_(kPrecInf) {
    if (!c.is_zero()) c_.push_back(c);
    normalize();
  }

  static TruncSeries zero_exact() { return TruncSeries(); }
  static TruncSeries zero_to_prec(int ram, long long prec_units) {
    TruncSeries s;
    s.ram_ = ram;
    s.lo_ = prec_units;
    s.prec_ = prec_units;
    return s;
  }
  // theta^{-n/ram} as an exact monomial
  static TruncSeries monomial(int ram, long long n, const RatFunc& c) {
    TruncSeries s;
    s.ram_ = ram;
    s.lo_ = n;
    s.prec_ = kPrecInf;
    if (!c.is_zero()) s.c_.push_back(c);
    return s;
  }
  static TruncSeries theta(int ram = 1) { return monomial(ram, -ram, RatFunc(1)); }
  // exact embedding of a theta-polynomial
  static TruncSeries from_apoly(const APoly& a, int ram = 1) {
    TruncSeries s;
    s.ram_ = ram;
    s.prec_ = kPrecInf;
    if (a.is_zero()) return s;
    s.lo_ = -(long long)a.deg() * ram;
    s.c_.assign(size_t(a.deg()) * size_t(ram) + 1, RatFunc());
    for (int i = 0; i <= a.deg(); ++i)
      s.c_[size_t((long long)(a.deg() - i) * ram)] = RatFunc(a.coeff(size_t(i)));
    return s;
  }

  int ram() const { return ram_; }
  long long lo_units() const { return lo_; }
  long long prec_units() const { return prec_; }
  bool exact() const { return prec_ == kPrecInf; }
  bool is_exact_zero() const { return c_.empty() && exact(); }
  bool is_zero_to_prec() const { return c_.empty(); }
  size_t support_size() const { return c_.size(); }

  Val valuation() const {  // infinity for exact zero; >= prec bound when zero-to-prec
    if (is_exact_zero()) return Val::infinity();
    if (c_.empty()) return Val::of(prec_, ram_);
    return Val::of(lo_, ram_);
  }
  Val prec_val() const { return exact() ? Val::infinity() : Val::of(prec_, ram_); }

  bool known(long long n_units) const { return n_units < prec_; }
  RatFunc coeff_units(long long n) const {
    if (!known(n)) throw InsufficientPrecision("coefficient at " + std::to_string(n));
    if (n < lo_ || n >= lo_ + (long long)c_.size()) return RatFunc();
    return c_[size_t(n - lo_)];
  }
  // coefficient of theta^{-v} (v in v_infinity units) on the unramified grid
  RatFunc coeff_vinf(long long v) const { return coeff_units(v * ram_); }

  TruncSeries promoted(int ram) const {
    if (ram == ram_) return *this;
    if (ram % ram_ != 0) throw Error("ramification promotion mismatch");
    int f = ram / ram_;
    TruncSeries s;
    s.ram_ = ram;
    s.lo_ = lo_ * f;
    s.prec_ = exact() ? kPrecInf : prec_ * f;
    s.c_.assign(c_.empty() ? 0 : (c_.size() - 1) * size_t(f) + 1, RatFunc());
    for (size_t i = 0; i < c_.size(); ++i) s.c_[i * size_t(f)] = c_[i];
    return s;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const RatFunc& s, const TruncSeries& a) {
    if (s.is_zero()) return a.is_exact_zero() ? a : zero_to_prec(a.ram_, a.prec_);
    TruncSeries r = a;
    for (auto& x : r.c_) x *= s;
    r.normalize();
    return r;
  }
  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  // structural equality (used by containers; semantic comparison should go
  // through (a-b).is_zero_to_prec())
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    int ram = std::max(a.ram_, b.ram_);
    TruncSeries x = a.promoted(ram), y = b.promoted(ram);
    return x.lo_ == y.lo_ && x.prec_ == y.prec_ && x.c_ == y.c_;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  TruncSeries inverse() const;
  TruncSeries pow(long long n) const {
    if (n < 0) return inverse().pow(-n);
    TruncSeries r(1), b = *this;
    while (n) { if (n & 1) r *= b; if (n >>= 1) b *= b; }
    return r;
  }
  TruncSeries shifted(long long units) const {  // multiply by theta^{-units/ram}
    TruncSeries r = *this;
    r.lo_ += units;
    if (!r.exact()) r.prec_ += units;
    return r;
  }
  // Frobenius twist: fixes coefficients, theta^{-n/ram} -> theta^{-nq/ram}
  TruncSeries tau(uint64_t q, int iterations = 1) const;
  // restrict knowledge to exponents < new_prec
  TruncSeries truncated(long long new_prec_units) const {
    TruncSeries r = *this;
    if (new_prec_units < r.prec_) {
      r.prec_ = new_prec_units;
      if (r.lo_ >= r.prec_) { r.c_.clear(); r.lo_ = r.prec_; }
      else if (r.lo_ + (long long)r.c_.size() > r.prec_) r.c_.resize(size_t(r.prec_ - r.lo_));
      r.normalize();
    }
    return r;
  }
  // substitute t_var -> theta; coefficients must be polynomial in that
  // variable; tail_tdeg bounds the variable degree of the unknown tail
  TruncSeries subst_var_to_theta(int var, int tail_tdeg) const;

  bool odd_part_nonzero() const {
    if (ram_ != 2) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero() && (lo_ + (long long)i) % 2 != 0) return true;
    return false;
  }
  TruncSeries even_part() const {
    TruncSeries r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i)
      if ((r.lo_ + (long long)i) % 2 != 0) r.c_[i] = RatFunc();
    r.normalize();
    return r;
  }
  TruncSeries odd_part() const {
    TruncSeries r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i)
      if ((r.lo_ + (long long)i) % 2 == 0) r.c_[i] = RatFunc();
    r.normalize();
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

 private:
  void normalize() {
    while (!c_.empty() && c_.front().is_zero()) { c_.erase(c_.begin()); ++lo_; }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty() && !exact()) lo_ = prec_;
    if (c_.empty() && exact()) lo_ = 0;
  }
  int ram_;
  long long lo_;
  long long prec_;
  std::vector<RatFunc> c_;
};

// num/den expanded as a Laurent series at infinity (oracle-grade helper)
TruncSeries expand_at_infinity(const APoly& num, const APoly& den, int ram = 1);

// tau(x) = x within the common precision window
inline bool tau_fixed_check(const TruncSeries& x, uint64_t q) {
  return (x.tau(q) - x).is_zero_to_prec();
}

}  // namespace ffrep
