#include "ffrep/ratfunc.hpp"

namespace ffrep {

namespace {
FqElem embed_eval_poly(const MultiPoly& p, const std::vector<FqElem>& point, const FqCtx* E) {
  FqElem acc = FqElem::zero(E);
  for (const auto& [ev, cf] : p.terms()) {
    FqElem m = cf.field() ? embed(cf, E) : cf.coerced(E);
    for (int v = 0; v < kMaxVars; ++v)
      if (ev.e[size_t(v)]) m *= point.at(size_t(v)).pow(ev.e[size_t(v)]);
    acc += m;
  }
  return acc;
}
}  // namespace

FqElem embed_eval(const RatFunc& c, const std::vector<FqElem>& point, const FqCtx* E) {
  FqElem den = embed_eval_poly(c.den(), point, E);
  if (den.is_zero()) throw ZeroDivision("embed_eval at pole");
  return embed_eval_poly(c.num(), point, E) * den.inverse();
}

void RatFunc::reduce() {
  if (num_.is_zero()) { den_ = MultiPoly(1); return; }
  // strip common monomial content
  ExpVec gn{}, gd{};
  bool first = true;
  auto monomial_gcd = [&](const MultiPoly& p, ExpVec& g) {
    bool f = true;
    for (const auto& [ev, c] : p.terms()) {
      if (f) { g = ev; f = false; continue; }
      for (int i = 0; i < kMaxVars; ++i) g.e[size_t(i)] = std::min(g.e[size_t(i)], ev.e[size_t(i)]);
    }
  };
  monomial_gcd(num_, gn);
  monomial_gcd(den_, gd);
  ExpVec g{};
  bool nontrivial = false;
  for (int i = 0; i < kMaxVars; ++i) {
    g.e[size_t(i)] = std::min(gn.e[size_t(i)], gd.e[size_t(i)]);
    if (g.e[size_t(i)]) nontrivial = true;
  }
  if (nontrivial) {
    auto divide_monomial = [&](const MultiPoly& p) {
      MultiPoly r;
      for (auto [ev, c] : p.terms()) {
        ExpVec ne;
        for (int i = 0; i < kMaxVars; ++i) ne.e[size_t(i)] = uint16_t(ev.e[size_t(i)] - g.e[size_t(i)]);
        r += MultiPoly::monomial(ne, c);
      }
      return r;
    };
    num_ = divide_monomial(num_);
    den_ = divide_monomial(den_);
    first = false;
  }
  (void)first;

  // variables actually present
  std::vector<int> vn = num_.vars_used(), vd = den_.vars_used();
  std::vector<int> all = vn;
  for (int v : vd)
    if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);

  if (all.empty()) {
    // constant over constant
    FqElem d = den_.constant_value();
    num_ = MultiPoly(num_.constant_value() * d.inverse());
    den_ = MultiPoly(1);
    return;
  }
  if (all.size() == 1) {
    int var = all[0];
    APoly n = num_.to_apoly(var), d = den_.to_apoly(var);
    APoly g1 = gcd(n, d);
    if (g1.deg() >= 1) { n = n / g1; d = d / g1; }
    FqElem li = d.lead().inverse();
    n = li * n;
    d = li * d;
    num_ = MultiPoly::from_apoly(n, var);
    den_ = MultiPoly::from_apoly(d, var);
    return;
  }
  // s >= 2: lazily unreduced; normalize the denominator's leading coefficient
  const FqElem lc = den_.terms().back().second;
  if (!lc.is_one()) {
    FqElem li = lc.inverse();
    num_ = li * num_;
    den_ = li * den_;
  }
}

}  // namespace ffrep
