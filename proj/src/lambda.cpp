#include "ffrep/lambda.hpp"

namespace ffrep {

LambdaElem operator*(const LambdaElem& a0, const LambdaElem& b0) {
  int qm1 = std::max(a0.qm1_, b0.qm1_);
  if (qm1 == 0) return LambdaElem(a0.comp_[0] * b0.comp_[0]);
  LambdaElem a = a0.coerced(qm1), b = b0.coerced(qm1);
  const size_t nsz = size_t(qm1);
  std::vector<TruncSeries> out(nsz, TruncSeries::zero_exact());
  const TruncSeries minus_theta = -TruncSeries::theta();
  for (int i = 0; i < qm1; ++i) {
    if (a.comp_[size_t(i)].is_exact_zero()) continue;
    for (int j = 0; j < qm1; ++j) {
      if (b.comp_[size_t(j)].is_exact_zero()) continue;
      TruncSeries prod = a.comp_[size_t(i)] * b.comp_[size_t(j)];
      int k = i + j;
      if (k >= qm1) {  // lambda^{q-1} = -theta
        k -= qm1;
        prod = prod * minus_theta;
      }
      out[size_t(k)] += prod;
    }
  }
  return LambdaElem(uint64_t(qm1) + 1, std::move(out));
}

LambdaElem LambdaElem::tau(uint64_t q, int iterations) const {
  if (qm1_ == 0) {
    LambdaElem r = *this;
    r.comp_[0] = r.comp_[0].tau(q, iterations);
    return r;
  }
  LambdaElem r = *this;
  for (int it = 0; it < iterations; ++it) {
    const size_t nsz = size_t(qm1_);
    std::vector<TruncSeries> out(nsz);
    for (int j = 0; j < qm1_; ++j) {
      // tau(lambda^j x) = (-theta)^j lambda^j tau(x)
      TruncSeries t = r.comp_[size_t(j)].tau(q, 1);
      const int ram = t.ram();
      TruncSeries factor = (-TruncSeries::theta(ram)).pow(j);
      out[size_t(j)] = t * factor;
    }
    r.comp_ = std::move(out);
  }
  return r;
}

LambdaElem LambdaElem::inverse() const {
  if (qm1_ == 0) return LambdaElem(comp_[0].inverse());
  const int n = qm1_;
  // multiplication-by-*this matrix over TruncSeries: column k holds the
  // components of (*this) * lambda^k; solve M x = e_0
  const size_t nsz = size_t(n);
  std::vector<std::vector<TruncSeries>> M(nsz, std::vector<TruncSeries>(nsz));
  const TruncSeries minus_theta = -TruncSeries::theta();
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      int slot = i + k;
      TruncSeries v = comp_[size_t(i)];
      if (slot >= n) { slot -= n; v = v * minus_theta; }
      M[size_t(slot)][size_t(k)] += v;
    }
  }
  std::vector<TruncSeries> rhs(nsz, TruncSeries::zero_exact());
  rhs[0] = TruncSeries(1);
  // Gaussian elimination with min-valuation pivoting
  std::vector<int> colperm(nsz);
  for (int i = 0; i < n; ++i) colperm[size_t(i)] = i;
  for (int row = 0; row < n; ++row) {
    int prow = -1, pcol = -1;
    Val best = Val::infinity();
    for (int i = row; i < n; ++i)
      for (int j = row; j < n; ++j) {
        if (M[size_t(i)][size_t(j)].is_zero_to_prec()) continue;
        Val v = M[size_t(i)][size_t(j)].valuation();
        if (v < best) { best = v; prow = i; pcol = j; }
      }
    if (prow < 0) throw InsufficientPrecision("LambdaElem inverse: singular to precision");
    std::swap(M[size_t(row)], M[size_t(prow)]);
    std::swap(rhs[size_t(row)], rhs[size_t(prow)]);
    for (int i = 0; i < n; ++i) std::swap(M[size_t(i)][size_t(row)], M[size_t(i)][size_t(pcol)]);
    std::swap(colperm[size_t(row)], colperm[size_t(pcol)]);
    TruncSeries pinv = M[size_t(row)][size_t(row)].inverse();
    for (int j = row; j < n; ++j) M[size_t(row)][size_t(j)] = pinv * M[size_t(row)][size_t(j)];
    rhs[size_t(row)] = pinv * rhs[size_t(row)];
    for (int i = 0; i < n; ++i) {
      if (i == row || M[size_t(i)][size_t(row)].is_zero_to_prec()) continue;
      TruncSeries f = M[size_t(i)][size_t(row)];
      for (int j = row; j < n; ++j)
        M[size_t(i)][size_t(j)] = M[size_t(i)][size_t(j)] - f * M[size_t(row)][size_t(j)];
      rhs[size_t(i)] = rhs[size_t(i)] - f * rhs[size_t(row)];
    }
  }
  std::vector<TruncSeries> out(nsz);
  for (int i = 0; i < n; ++i) out[size_t(colperm[size_t(i)])] = rhs[size_t(i)];
  return LambdaElem(uint64_t(n) + 1, std::move(out));
}

TruncSeries pitilde_unit(const FqCtx* F, int ram) {
  const uint64_t q = F->q;
  const long long cap = series_cap_vinf() * ram;
  const RatFunc one(FqElem::one(F));
  TruncSeries acc = TruncSeries(one).promoted(ram);
  uint64_t qi = 1;
  while (true) {
    qi *= q;
    long long units = (long long)(qi - 1) * ram;
    if (units >= cap) break;
    // (1 - theta^{1-q^i})^{-1}
    TruncSeries f = TruncSeries(one).promoted(ram) - TruncSeries::monomial(ram, units, one);
    acc = acc * f.inverse();
  }
  return acc.truncated(cap);
}

LambdaElem pitilde(const FqCtx* F, int ram) {
  TruncSeries u = pitilde_unit(F, ram);
  return TruncSeries::monomial(ram, -ram, RatFunc(FqElem::one(F))) * (u * LambdaElem::lambda(F, ram));
}

}  // namespace ffrep
