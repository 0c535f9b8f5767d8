#include "ffrep/carlitz.hpp"

#include <algorithm>
#include <map>

namespace ffrep {

APoly carlitz_factorial(const FqCtx* F, int i) {
  APoly d = APoly::one(F);
  uint64_t qi = 1;
  for (int k = 1; k <= i; ++k) {
    qi *= F->q;
    APoly bracket = APoly::theta_pow(F, size_t(qi)) - APoly::theta(F);
    d = bracket * d.pow(F->q);
  }
  return d;
}

MatL tau_mat(const MatL& m, uint64_t q, int iterations) {
  MatL r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).tau(q, iterations);
  return r;
}

MatS tau_mat(const MatS& m, uint64_t q, int iterations) {
  MatS r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).tau(q, iterations);
  return r;
}

MatL TwistedPoly::apply(const MatL& m) const {
  MatL acc(m.rows(), m.cols());
  acc.setZero();
  MatL t = m;
  for (size_t i = 0; i < coeff.size(); ++i) {
    acc = acc + coeff[i] * t;
    if (i + 1 < coeff.size()) t = tau_mat(t, q);
  }
  return acc;
}

TwistedPoly TwistedPoly::compose(const TwistedPoly& other) const {
  // (c tau^i)(c' tau^j) = c tau^i(c') tau^{i+j}
  TwistedPoly r;
  r.q = q;
  if (coeff.empty() || other.coeff.empty()) return r;
  Eigen::Index n = coeff[0].rows();
  r.coeff.assign(coeff.size() + other.coeff.size() - 1, MatL(n, n));
  for (auto& m : r.coeff) m.setZero();
  for (size_t i = 0; i < coeff.size(); ++i) {
    for (size_t j = 0; j < other.coeff.size(); ++j) {
      r.coeff[i + j] = r.coeff[i + j] + coeff[i] * tau_mat(other.coeff[j], q, int(i));
    }
  }
  return r;
}

TwistedPoly TwistedPoly::c_theta(const FqCtx* F, int d) {
  TwistedPoly r;
  r.q = F->q;
  MatL th(d, d), one(d, d);
  th.setZero();
  one.setZero();
  for (int i = 0; i < d; ++i) {
    th(i, i) = LambdaElem(TruncSeries::monomial(1, -1, RatFunc(FqElem::one(F))));
    one(i, i) = LambdaElem(TruncSeries(RatFunc(FqElem::one(F))));
  }
  r.coeff = {th, one};
  return r;
}

TwistedPoly TwistedPoly::c_poly(const APoly& a, int d) {
  const FqCtx* F = a.field();
  if (!F) throw Error("c_poly needs a field-valued polynomial");
  uint64_t q = F->q;
  TwistedPoly acc;
  acc.q = q;
  MatL zero(d, d);
  zero.setZero();
  acc.coeff = {zero};
  if (a.is_zero()) return acc;
  TwistedPoly ct = c_theta(F, d);
  // Horner over theta-digits: C_a = sum a_k C_theta^k
  TwistedPoly id;
  id.q = q;
  MatL one(d, d);
  one.setZero();
  for (int i = 0; i < d; ++i) one(i, i) = LambdaElem(1);
  id.coeff = {one};
  TwistedPoly r;
  r.q = q;
  r.coeff = {zero};
  for (int k = a.deg(); k >= 0; --k) {
    r = r.compose(ct);
    FqElem c = a.coeff(size_t(k));
    if (!c.is_zero()) {
      // add c * tau^0
      RatFunc cr((MultiPoly(c)));
      if (r.coeff.empty()) r.coeff = {zero};
      MatL add = one;
      for (Eigen::Index i = 0; i < add.rows(); ++i) add(i, i) = cr * add(i, i);
      r.coeff[0] = r.coeff[0] + add;
    }
  }
  return r;
}

MatL carlitz_action(const APoly& a, const MatL& m, uint64_t q) {
  // F_q-linear in the coefficients of a: C_a(m) = sum_k a_k C_theta^k(m)
  MatL acc(m.rows(), m.cols());
  acc.setZero();
  MatL t = m;  // C_theta^k(m)
  const LambdaElem theta(TruncSeries::theta());
  for (int k = 0; k <= a.deg(); ++k) {
    FqElem c = a.coeff(size_t(k));
    if (!c.is_zero()) {
      RatFunc cr((MultiPoly(c)));
      MatL scaled(t.rows(), t.cols());
      for (Eigen::Index i = 0; i < t.rows(); ++i)
        for (Eigen::Index j = 0; j < t.cols(); ++j) scaled(i, j) = cr * t(i, j);
      acc = acc + scaled;
    }
    if (k < a.deg()) {
      // C_theta(x) = theta x + tau(x)
      MatL next(t.rows(), t.cols());
      for (Eigen::Index i = 0; i < t.rows(); ++i)
        for (Eigen::Index j = 0; j < t.cols(); ++j)
          next(i, j) = theta * t(i, j) + t(i, j).tau(q, 1);
      t = next;
    }
  }
  return acc;
}

namespace {

Val term_valuation_bound(const Val& vf, int i, uint64_t q) {
  // v(D_i^{-1} tau^i f) = q^i v(f) + i q^i
  long long qi = 1;
  for (int k = 0; k < i; ++k) qi *= (long long)q;
  if (vf.inf) return Val::infinity();
  return Val::of(vf.num * qi + (long long)i * qi * vf.den, vf.den);
}

}  // namespace

MatL exp_carlitz(const MatL& f, uint64_t q, const Precision& prec) {
  const FqCtx* F = nullptr;  // q determines arithmetic; coefficients carry fields
  (void)F;
  MatL acc = f;  // i = 0 term (D_0 = 1)
  Val vf = mat_valuation(f);
  if (vf.inf) return acc;
  const long long target = prec.cap();
  // D_i needs a field context; recover one from q
  const FqCtx* Fq = fq_context_q(q);
  MatL t = f;
  Val tail = Val::infinity();
  for (int i = 1;; ++i) {
    Val bound = term_valuation_bound(vf, i, q);
    // stop when this and all later terms sit above the window
    long long arg_num = vf.num + (long long)(i)*vf.den;  // v(f) + i, scaled by den
    if (arg_num > 0 && bound > Val::of(target, 1)) { tail = bound; break; }
    t = tau_mat(t, q);
    APoly di = carlitz_factorial(Fq, i);
    TruncSeries dinv = TruncSeries::from_apoly(di).inverse();
    MatL term(t.rows(), t.cols());
    for (Eigen::Index r = 0; r < t.rows(); ++r)
      for (Eigen::Index c = 0; c < t.cols(); ++c) term(r, c) = dinv * t(r, c);
    acc = acc + term;
    if (i > 64) throw InsufficientPrecision("exp_carlitz did not stabilize");
  }
  // the omitted tail caps the guaranteed precision
  for (Eigen::Index r = 0; r < acc.rows(); ++r)
    for (Eigen::Index c = 0; c < acc.cols(); ++c) acc(r, c) = acc(r, c).truncated_prec(tail);
  return acc;
}

TruncSeries exp_carlitz_scalar(const TruncSeries& f, uint64_t q, const Precision& prec) {
  MatL m(1, 1);
  m(0, 0) = LambdaElem(f);
  MatL r = exp_carlitz(m, q, prec);
  if (!r(0, 0).lambda_free_to_prec()) throw Error("exp_carlitz_scalar: lambda components appeared");
  return r(0, 0).scalar_part();
}

TruncSeries e_lattice(const TruncSeries& z, uint64_t q, const Precision& prec) {
  // e_A(z) = sum_i pitilde^{q^i-1} D_i^{-1} z^{q^i};
  // pitilde^{q^i-1} = (-theta)^{(q^i-1)/(q-1)} (theta * unit)^{q^i-1}
  const FqCtx* F = fq_context_q(q);
  const int ram = z.ram();
  const long long target = prec.cap();
  TruncSeries acc = z;  // i = 0
  Val vz = z.valuation();
  if (vz.inf) return acc;
  Val tail = Val::infinity();
  for (int i = 1;; ++i) {
    long long qi = 1;
    for (int k = 0; k < i; ++k) qi *= (long long)q;
    // v(term) = q^i v(z) + i q^i - (q^i - 1) q/(q-1) >= q^i (v(z) + i - 2)
    Val bound = Val::of(vz.num * qi + ((long long)i * qi - (qi - 1) * (long long)q / ((long long)q - 1) - 1) * vz.den,
                        vz.den);
    if (vz.num + ((long long)i - 2) * vz.den > 0 && bound > Val::of(target, 1)) { tail = bound; break; }
    APoly di = carlitz_factorial(F, i);
    long long e = (qi - 1) / ((long long)q - 1);
    // z^{q^i} can sit far below valuation 0; the coefficient series then
    // needs its window raised so the term still reaches the target
    long long vz_drop = std::max((long long)0, (-vz.num * qi + vz.den - 1) / vz.den);
    SeriesCapGuard guard(target + vz_drop + (qi - 1) + 8);
    // (-theta)^e
    APoly mt = APoly(F, {FqElem::zero(F), -FqElem::one(F)}).pow(uint64_t(e));
    TruncSeries coeffs = TruncSeries::from_apoly(mt, ram) * pitilde_unit(F, ram).pow(qi - 1) *
                         TruncSeries::from_apoly(di, ram).inverse();
    // theta^{q^i-1}
    coeffs = coeffs.shifted(-(qi - 1) * ram);
    acc = acc + coeffs * z.pow(qi);
    if (i > 24) throw InsufficientPrecision("e_lattice did not stabilize");
  }
  if (!tail.inf) {
    long long u = (tail.num * ram) / tail.den + ((tail.num * ram) % tail.den ? 1 : 0);
    acc = acc.truncated(u);
  }
  return acc;
}

TruncSeries u_eval(const TruncSeries& z, uint64_t q, const Precision& prec) {
  if (!z.odd_part_nonzero()) throw PointOnBoundary("u_eval: z has no odd theta^{-1/2} part");
  TruncSeries e = e_lattice(z, q, prec);
  if (e.is_zero_to_prec()) throw InsufficientPrecision("u_eval: e_A(z) vanishes to precision");
  return e.inverse();
}

}  // namespace ffrep
