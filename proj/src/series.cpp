#include "ffrep/series.hpp"

#include <algorithm>

namespace ffrep {

namespace {
thread_local long long g_cap_vinf = 84;

long long clamp_prec(long long p) { return p > kPrecInf ? kPrecInf : p; }
}  // namespace

long long series_cap_vinf() { return g_cap_vinf; }

SeriesCapGuard::SeriesCapGuard(long long cap_vinf) : old_(g_cap_vinf) { g_cap_vinf = cap_vinf; }
SeriesCapGuard::~SeriesCapGuard() { g_cap_vinf = old_; }

TruncSeries operator+(const TruncSeries& a0, const TruncSeries& b0) {
  int ram = std::max(a0.ram_, b0.ram_);
  TruncSeries a = a0.promoted(ram), b = b0.promoted(ram);
  TruncSeries r;
  r.ram_ = ram;
  r.prec_ = std::min(a.prec_, b.prec_);
  if (a.c_.empty() && b.c_.empty()) {
    r.lo_ = r.exact() ? 0 : r.prec_;
    return r;
  }
  long long lo = std::min(a.c_.empty() ? b.lo_ : a.lo_, b.c_.empty() ? a.lo_ : b.lo_);
  long long hi = std::max(a.lo_ + (long long)a.c_.size(), b.lo_ + (long long)b.c_.size());
  hi = std::min(hi, r.prec_);
  if (hi <= lo) {
    r.lo_ = r.exact() ? 0 : r.prec_;
    return r;
  }
  r.lo_ = lo;
  r.c_.assign(size_t(hi - lo), RatFunc());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    long long n = a.lo_ + (long long)i;
    if (n < hi) r.c_[size_t(n - lo)] += a.c_[i];
  }
  for (size_t i = 0; i < b.c_.size(); ++i) {
    long long n = b.lo_ + (long long)i;
    if (n < hi) r.c_[size_t(n - lo)] += b.c_[i];
  }
  r.normalize();
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a0, const TruncSeries& b0) {
  if (a0.is_exact_zero() || b0.is_exact_zero()) return TruncSeries::zero_exact();
  int ram = std::max(a0.ram_, b0.ram_);
  TruncSeries a = a0.promoted(ram), b = b0.promoted(ram);
  // ultrametric precision propagation: unknown tails shift by the other
  // factor's valuation
  long long prec = kPrecInf;
  if (!a.exact()) prec = std::min(prec, clamp_prec(a.prec_ + (b.c_.empty() ? b.prec_ : b.lo_)));
  if (!b.exact()) prec = std::min(prec, clamp_prec(b.prec_ + (a.c_.empty() ? a.prec_ : a.lo_)));
  if (prec != kPrecInf) prec = std::min(prec, g_cap_vinf * ram);
  TruncSeries r;
  r.ram_ = ram;
  r.prec_ = prec;
  if (a.c_.empty() || b.c_.empty()) {
    r.lo_ = r.exact() ? 0 : r.prec_;
    return r;
  }
  long long lo = a.lo_ + b.lo_;
  long long hi = std::min(lo + (long long)a.c_.size() + (long long)b.c_.size() - 1, prec);
  if (hi <= lo) {
    r.lo_ = r.exact() ? 0 : r.prec_;
    return r;
  }
  r.lo_ = lo;
  r.c_.assign(size_t(hi - lo), RatFunc());
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    long long base = a.lo_ + (long long)i + b.lo_;
    size_t jmax = std::min(b.c_.size(), size_t(std::max((long long)0, hi - base)));
    for (size_t j = 0; j < jmax; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[size_t(base - lo) + j] += a.c_[i] * b.c_[j];
    }
  }
  r.normalize();
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (c_.empty()) {
    if (is_exact_zero()) throw ZeroDivision("series inverse of exact zero");
    throw InsufficientPrecision("inverse: leading term not determined");
  }
  long long v = lo_;
  // relative window of the result
  long long window = exact() ? g_cap_vinf * ram_ : std::min(prec_ - v, g_cap_vinf * ram_);
  TruncSeries r;
  r.ram_ = ram_;
  r.lo_ = -v;
  r.prec_ = clamp_prec(-v + window);
  r.c_.assign(size_t(window), RatFunc());
  RatFunc u = c_[0].inverse();
  r.c_[0] = u;
  for (long long n = 1; n < window; ++n) {
    // b_n = -u * sum_{1<=j<=n} x_{v+j} b_{n-j}
    RatFunc s;
    size_t jmax = std::min(size_t(n), c_.size() - 1);
    for (size_t j = 1; j <= jmax; ++j) {
      if (c_[j].is_zero()) continue;
      const RatFunc& bn = r.c_[size_t(n - (long long)j)];
      if (bn.is_zero()) continue;
      s += c_[j] * bn;
    }
    if (!s.is_zero()) r.c_[size_t(n)] = -(u * s);
  }
  r.normalize();
  return r;
}

TruncSeries TruncSeries::tau(uint64_t q, int iterations) const {
  TruncSeries r = *this;
  for (int it = 0; it < iterations; ++it) {
    TruncSeries s;
    s.ram_ = r.ram_;
    s.prec_ = r.exact() ? kPrecInf : clamp_prec(r.prec_ * (long long)q);
    if (!s.exact()) s.prec_ = std::min(s.prec_, g_cap_vinf * s.ram_);
    if (r.c_.empty()) {
      s.lo_ = s.exact() ? 0 : s.prec_;
      r = s;
      continue;
    }
    s.lo_ = r.lo_ * (long long)q;
    long long hi = std::min(s.lo_ + ((long long)r.c_.size() - 1) * (long long)q + 1, s.prec_);
    if (hi <= s.lo_) {
      s.c_.clear();
      s.lo_ = s.exact() ? 0 : s.prec_;
      r = s;
      continue;
    }
    s.c_.assign(size_t(hi - s.lo_), RatFunc());
    for (size_t i = 0; i < r.c_.size(); ++i) {
      long long n = (r.lo_ + (long long)i) * (long long)q;
      if (n < hi) s.c_[size_t(n - s.lo_)] = r.c_[i];
    }
    s.normalize();
    r = s;
  }
  return r;
}

TruncSeries TruncSeries::subst_var_to_theta(int var, int tail_tdeg) const {
  TruncSeries r;
  r.ram_ = ram_;
  r.prec_ = exact() ? kPrecInf : clamp_prec(prec_ - (long long)tail_tdeg * ram_);
  r.lo_ = r.exact() ? 0 : r.prec_;
  TruncSeries acc = r;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    long long n = lo_ + (long long)i;
    if (!c_[i].is_polynomial()) throw Error("subst_var_to_theta: coefficient has a denominator");
    MultiPoly p = c_[i].polynomial();
    for (const auto& [ev, cf] : p.terms()) {
      int k = ev.e[size_t(var)];
      ExpVec rest = ev;
      rest.e[size_t(var)] = 0;
      long long new_n = n - (long long)k * ram_;
      if (new_n >= acc.prec_) continue;
      acc += TruncSeries::monomial(ram_, new_n, RatFunc(MultiPoly::monomial(rest, cf)))
                 .truncated(acc.prec_);
    }
  }
  return acc;
}

TruncSeries expand_at_infinity(const APoly& num, const APoly& den, int ram) {
  return TruncSeries::from_apoly(num, ram) * TruncSeries::from_apoly(den, ram).inverse();
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
  bool first = true;
  for (size_t i = 0; i < s.c_.size(); ++i) {
    if (s.c_[i].is_zero()) continue;
    long long n = s.lo_ + (long long)i;
    if (!first) os << " + ";
    first = false;
    os << "(" << s.c_[i] << ")";
    if (n != 0) {
      os << "*O^";
      if (s.ram_ == 1) os << -n;
      else os << "(" << -n << "/" << s.ram_ << ")";
    }
  }
  if (first) os << "0";
  if (!s.exact()) {
    os << " + O(O^-";
    if (s.ram_ == 1) os << s.prec_;
    else os << "(" << s.prec_ << "/" << s.ram_ << ")";
    os << ")";
  }
  return os;
}

}  // namespace ffrep
